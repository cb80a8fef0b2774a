// Copyright 2026 The domap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMAP_GRAPH_HPP_
#define DOMAP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domap/word.hpp"

namespace domap {

// Bipartite domination graph on [m] ∪ [n] in which every right vertex has
// degree exactly one. It is stored as the owner of each right position; the
// set of positions owned by left vertex i is its block J_i.
//
// Every left vertex must own at least one position: a left vertex of degree
// zero rules out any domination mapping, so such graphs are rejected.
class DominationGraph {
 public:
  // Left vertex i owns the next degrees[i] positions, in vertex order.
  static DominationGraph from_degrees(std::span<const int> degrees);
  static DominationGraph from_owners(int m, std::vector<int> owners);
  // Arbitrary bipartite graph given by (left, right) pairs, 0-based. A right
  // vertex adjacent to several left vertices keeps only the edge to the
  // lowest-index one; domination under the full graph implies domination
  // under the result.
  static DominationGraph from_edges(int m, int n, std::span<const std::pair<int, int>> edges);
  // The equitable layout used by the reduced LP: the n mod m vertices of
  // degree floor(n/m)+1 come first, followed by those of degree floor(n/m).
  static DominationGraph equitable(int m, int n);

  int m() const { return m_; }
  int n() const { return static_cast<int>(owners_.size()); }
  int owner(std::size_t position) const { return owners_[position]; }
  const std::vector<int>& owners() const { return owners_; }
  const std::vector<std::size_t>& block(int vertex) const { return blocks_[vertex]; }

  // Degrees in vertex order.
  std::vector<int> degrees() const;
  // Degrees sorted nondecreasing (δ_1 ≤ … ≤ δ_m).
  std::vector<int> degree_sequence() const;
  // d_i = number of left vertices of degree i, for i = 1..Δ (index 0 unused).
  std::vector<int> degree_distribution() const;

  bool is_equitable() const;
  // True iff J_1, J_2, … are consecutive runs laid out in vertex order.
  bool has_consecutive_blocks() const;

  std::string describe() const;

  friend bool operator==(const DominationGraph&, const DominationGraph&) = default;

 private:
  DominationGraph(int m, std::vector<int> owners);

  int m_ = 0;
  std::vector<int> owners_;
  std::vector<std::vector<std::size_t>> blocks_;
};

// True iff every nonzero position of y lies in the block of a vertex i with
// x_i = 1.
bool dominates(const Word& x, const Word& y, const DominationGraph& g);

// Bit of left vertex `vertex` in the integer encoding of an m-bit domain
// word (vertex 0 is the most significant bit).
inline bool domain_bit(std::uint64_t x, int m, int vertex) {
  return (x >> (m - 1 - vertex)) & 1U;
}

}  // namespace domap

#endif  // DOMAP_GRAPH_HPP_
