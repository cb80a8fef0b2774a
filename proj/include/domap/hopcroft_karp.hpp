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

#ifndef DOMAP_HOPCROFT_KARP_HPP_
#define DOMAP_HOPCROFT_KARP_HPP_

#include <cstdint>
#include <limits>
#include <vector>

namespace domap {

inline constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();

// Bipartite graph in compressed sparse row form: the neighbours of left
// vertex u are targets[offsets[u] .. offsets[u + 1]).
struct Csr {
  std::uint32_t right_size = 0;
  std::vector<std::uint64_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::uint32_t left_size() const { return static_cast<std::uint32_t>(offsets.size() - 1); }
  std::uint64_t edge_count() const { return targets.size(); }
};

struct Matching {
  std::vector<std::uint32_t> mate_left;   // right vertex or kUnmatched
  std::vector<std::uint32_t> mate_right;  // left vertex or kUnmatched
  std::uint64_t size = 0;
};

// Maximum matching. Neighbour lists are scanned in stored order, both in the
// greedy start and in the augmenting phases, so the result is reproducible.
Matching hopcroft_karp(const Csr& g);

// Left vertices reachable by alternating paths from unmatched left vertices.
// When the matching is maximum and not left-perfect this set X satisfies
// |N(X)| = |X| - (number of unmatched left vertices) < |X|.
std::vector<std::uint32_t> alternating_reach(const Csr& g, const Matching& mt);

}  // namespace domap

#endif  // DOMAP_HOPCROFT_KARP_HPP_
