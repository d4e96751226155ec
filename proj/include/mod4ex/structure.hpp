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

namespace mod4ex {

/// Blocks are maximal 2-connected subgraphs or bridge edges, each given as a
/// sorted vertex list. Every edge lies in exactly one block; isolated vertices
/// lie in none. Blocks are ordered by their sorted vertex lists.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
};

BlockDecomposition block_decomposition(const Graph& g);

/// All pairs {x, y} (x < y) whose removal disconnects g, lexicographically.
/// Throws GraphError if g is disconnected or has fewer than 4 vertices.
std::vector<Edge> find_2cuts(const Graph& g);

/// Whether removing x and y leaves a disconnected graph.
bool is_2cut(const Graph& g, Vertex x, Vertex y);

}  // namespace mod4ex
