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

#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "mod4ex/graph.hpp"

namespace mod4ex {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6: N(n) header, then the upper triangle x(0,1), x(0,2), x(1,2), ...
/// packed six bits per byte (each byte offset by 63), zero padded.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix; rejects nonzero padding bits.
Graph from_graph6(std::string_view text);

/// Edge list: "n m" then m lines "u v" (0-based). '#' starts a comment.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { kGraph6, kEdgeList };

GraphFormat parse_format(std::string_view name);
std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);

}  // namespace mod4ex
