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

#ifndef DOMAP_COMPATIBILITY_HPP_
#define DOMAP_COMPATIBILITY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "domap/ball.hpp"
#include "domap/graph.hpp"
#include "domap/hopcroft_karp.hpp"

namespace domap {

inline constexpr std::uint64_t kDefaultMaxEdges = 400'000'000;

// Bipartite graph between {0,1}^m (by integer value) and B(n, w) (by rank):
// x and y are adjacent iff x dominates y under the domination graph.
// Neighbour lists are in increasing rank order.
class CompatibilityGraph {
 public:
  CompatibilityGraph(const DominationGraph& g, int w, std::uint64_t max_edges = kDefaultMaxEdges);

  const DominationGraph& graph() const { return graph_; }
  int w() const { return ball_.w(); }
  const BallIndexer& ball() const { return ball_; }
  const Csr& csr() const { return csr_; }

  std::uint64_t left_size() const { return csr_.left_size(); }
  std::uint64_t right_size() const { return csr_.right_size; }
  std::uint64_t edge_count() const { return csr_.edge_count(); }

  std::span<const std::uint32_t> neighbors(std::uint64_t x) const {
    return {csr_.targets.data() + csr_.offsets[x], csr_.targets.data() + csr_.offsets[x + 1]};
  }

  // |N(X)| by direct union of neighbour lists.
  std::uint64_t neighborhood_size(std::span<const std::uint64_t> xs) const;

 private:
  DominationGraph graph_;
  BallIndexer ball_;
  Csr csr_;
};

// Σ_x |B(|P(x)|, w)| where P(x) is the union of the blocks of x's set
// vertices, computed without building the graph.
std::uint64_t count_compatibility_edges(const DominationGraph& g, int w);

}  // namespace domap

#endif  // DOMAP_COMPATIBILITY_HPP_
