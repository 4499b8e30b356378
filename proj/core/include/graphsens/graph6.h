// Copyright 2026 The graphsens Authors
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

// graph6 text format for simple undirected graphs: a size header followed by
// the upper triangle of the adjacency matrix in column order (for j = 1..n-1,
// i = 0..j-1), six bits per byte, each byte offset by 63.

#ifndef GRAPHSENS_GRAPH6_H_
#define GRAPHSENS_GRAPH6_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graphsens/graph.h"

namespace graphsens {

// Largest order with a 1-byte header, and with the 4-byte header.
inline constexpr int kGraph6ShortMax = 62;
inline constexpr int kGraph6LongMax = 258047;

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Throws std::invalid_argument above kGraph6LongMax vertices.
std::string WriteGraph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and one trailing newline. Throws
// Graph6Error on bytes outside [63, 126], a truncated adjacency stream,
// nonzero padding or trailing bytes.
Graph ReadGraph6(std::string_view text);

}  // namespace graphsens

#endif  // GRAPHSENS_GRAPH6_H_
