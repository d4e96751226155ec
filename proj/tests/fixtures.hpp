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

#include <vector>

#include "mod4ex/graph.hpp"

namespace fixture {

using mod4ex::Edge;
using mod4ex::Graph;

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Two triangles sharing vertex 2.
inline Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Two triangles sharing the edge {0, 1}.
inline Graph diamond() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

// a..h -> 0..7, edge list read off the figure coordinates.
inline Graph l8_by_hand() {
  enum { a, b, c, d, e, f, g, h };
  return Graph::from_edges(8, {{a, b}, {a, c}, {a, e}, {c, d}, {c, e}, {d, g},
                               {b, g}, {e, f}, {f, g}, {e, h}, {f, h}});
}

}  // namespace fixture
