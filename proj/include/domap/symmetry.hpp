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

#ifndef DOMAP_SYMMETRY_HPP_
#define DOMAP_SYMMETRY_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "domap/ball.hpp"
#include "domap/bigint.hpp"
#include "domap/graph.hpp"
#include "domap/lp.hpp"

namespace domap {

// The unreduced edge LP of the equitable compatibility graph, for tiny
// instances: one variable per edge (x, rank y), one row per domain word and
// one per range word, objective Σ x_e.
class FullLp {
 public:
  FullLp(int m, int n, int w, std::size_t max_edges = 200000);

  const EquitableSplit& split() const { return split_; }
  const DominationGraph& graph() const { return graph_; }
  const BallIndexer& ball() const { return ball_; }

  std::size_t edge_count() const { return edges_.size(); }
  const std::pair<std::uint64_t, std::uint32_t>& edge(std::size_t e) const { return edges_[e]; }
  std::size_t edge_index(std::uint64_t x, std::uint32_t rank) const;
  const OrbitIndex& edge_orbit(std::size_t e) const { return orbit_[e]; }

  std::size_t row_count() const { return left_rows_ + ball_.size(); }
  // Rows 0 .. 2^m - 1 are domain words; the rest are range ranks.
  std::pair<int, int> row_class(std::size_t row) const;

  std::vector<Rational> row_sums(const std::vector<Rational>& x) const;
  bool feasible(const std::vector<Rational>& x) const;
  Rational objective(const std::vector<Rational>& x) const;

  // Σ over edges of orbit k of the coefficient of `row` (0 or 1 each).
  std::vector<std::vector<BigInt>> collapsed_rows() const;

 private:
  EquitableSplit split_;
  DominationGraph graph_;
  BallIndexer ball_;
  std::size_t left_rows_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> edges_;
  std::vector<std::size_t> first_edge_;  // per domain word, plus sentinel
  std::vector<OrbitIndex> orbit_;
  std::vector<std::vector<std::size_t>> range_edges_;  // per rank
};

// Block-support pattern of a range word under the equitable graph:
// (#nonzero blocks among the first class, #nonzero among the second).
std::pair<int, int> range_class(const Word& y, const EquitableSplit& s, const DominationGraph& g);

// An element of (S_{I1} × S_{I2}) × B: a vertex permutation within each
// degree class, moving blocks along, followed by a permutation of range
// words that preserves their block support.
struct GroupElement {
  std::vector<int> vertex_perm;          // vertex i ↦ vertex_perm[i]
  std::vector<std::uint32_t> range_perm;  // rank ↦ rank
};

class EquitableGroup {
 public:
  explicit EquitableGroup(const FullLp& lp);

  BigInt order() const;
  GroupElement random(std::mt19937_64& rng) const;
  // Every element; throws ResourceError when the order exceeds `limit`.
  std::vector<GroupElement> enumerate(std::size_t limit = 100000) const;

  // π as a permutation of edge indices.
  std::vector<std::size_t> edge_permutation(const GroupElement& g) const;
  // x^π(π(e)) = x(e).
  std::vector<Rational> act(const GroupElement& g, const std::vector<Rational>& x) const;

 private:
  std::uint32_t move_word(const std::vector<int>& vertex_perm, std::uint32_t rank) const;

  const FullLp* lp_;
  std::vector<std::vector<int>> vertex_classes_;
  std::vector<std::vector<std::uint32_t>> support_classes_;  // ranks grouped by block support
};

// Average of x^π over all π.
std::vector<Rational> group_average(const EquitableGroup& group, const std::vector<Rational>& x);

// True iff x is constant on every orbit class.
bool is_orbit_regular(const FullLp& lp, const std::vector<Rational>& x);

// Random nonnegative vector scaled so that its largest row sum is 1.
std::vector<Rational> random_feasible(const FullLp& lp, std::mt19937_64& rng);

}  // namespace domap

#endif  // DOMAP_SYMMETRY_HPP_
