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

#ifndef DOMAP_MATCHING_HPP_
#define DOMAP_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "domap/compatibility.hpp"
#include "domap/graph.hpp"
#include "domap/hopcroft_karp.hpp"
#include "domap/mapping.hpp"

namespace domap {

Matching max_matching(const CompatibilityGraph& h);

// A left set X with |N(X)| < |X|, or nullopt when `mt` saturates the left side.
// `mt` must be a maximum matching of h.
std::optional<std::vector<std::uint64_t>> hall_violator(const CompatibilityGraph& h, const Matching& mt);

// Reads a left-perfect matching as a mapping: φ(x) = unrank(mate(x)).
DominationMapping mapping_from_matching(const CompatibilityGraph& h, const Matching& mt);

struct GraphDecision {
  bool exists = false;
  std::uint64_t matching_size = 0;
  std::uint64_t left_size = 0;
  std::uint64_t right_size = 0;
  std::uint64_t edges = 0;
  std::optional<DominationMapping> mapping;   // when exists
  std::vector<std::uint64_t> violator;        // when !exists
};

GraphDecision decide_graph(const DominationGraph& g, int w, std::uint64_t max_edges = kDefaultMaxEdges);

// Nondecreasing degree sequences of n into m positive parts, most equitable
// first: ascending Σ δ_i², ties in lexicographic order. Throws ResourceError
// when more than `cap` sequences exist.
std::vector<std::vector<int>> degree_multisets(int m, int n, std::size_t cap);

struct AllGraphsOptions {
  std::size_t max_graphs = 20000;
  std::uint64_t max_edges = kDefaultMaxEdges;
  bool pigeonhole_shortcut = true;  // skip matching when 2^m > |B(n, w)|
};

struct AllGraphsDecision {
  bool exists = false;
  std::size_t graphs_tried = 0;
  std::size_t graphs_total = 0;  // left at 0 when the pigeonhole shortcut decides
  bool equitable_succeeded = false;
  // A mapping exists but not for the equitable graph.
  bool conjecture_counterexample = false;
  std::optional<DominationGraph> witness;
  std::optional<DominationMapping> mapping;
};

AllGraphsDecision decide_all_graphs(int m, int n, int w, const AllGraphsOptions& opts = {});

}  // namespace domap

#endif  // DOMAP_MATCHING_HPP_
