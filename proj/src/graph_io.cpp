// Copyright 2026 The mod4ex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mod4ex/graph_io.hpp"

#include <sstream>
#include <vector>

namespace mod4ex {

namespace {

constexpr char kBias = 63;

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
  out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
  out.push_back(static_cast<char>((n & 0x3f) + kBias));
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw ParseError(std::string("graph6: invalid character '") + c + "'");
  }
  return c - kBias;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("graph6: order exceeds " + std::to_string(kMaxVertices));
    }
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (n <= 62) throw ParseError("graph6: non-minimal size header");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxVertices));
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text[pos + bytes - 1]);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  std::vector<long long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("edge list: not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("edge list: not an integer: '" + tok + "'");
      numbers.push_back(value);
    }
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing \"n m\" header");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 0 || n > kMaxVertices) throw ParseError("edge list: order out of range");
  if (m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges but found " +
                     std::to_string((numbers.size() - 2) / 2) + " pairs");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const long long u = numbers[static_cast<std::size_t>(2 + 2 * i)];
    const long long v = numbers[static_cast<std::size_t>(3 + 2 * i)];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::kEdgeList;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

Graph read_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? from_graph6(text) : from_edge_list(text);
}

}  // namespace mod4ex
