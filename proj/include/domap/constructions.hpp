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

#ifndef DOMAP_CONSTRUCTIONS_HPP_
#define DOMAP_CONSTRUCTIONS_HPP_

#include "domap/mapping.hpp"

namespace domap {

// The (3,4,2) mapping 000→0000, 001→0001, 010→0010, 011→0011, 100→0100,
// 101→0101, 110→1000, 111→1001 under one of three graphs:
//   variant 1: L1-{1,2}, L2-{1,3}, L3-{4}, right vertex 1 normalized to L1
//   variant 2: L1-{2}, L2-{1,3}, L3-{4}
//   variant 3: L1-{1,2}, L2-{3}, L3-{4}
DominationMapping small_3_4_2(int variant = 3);

// φ(x) = x with every vertex owning its own position; w defaults to m.
DominationMapping identity_mapping(int m);
DominationMapping identity_mapping(int m, int w);

// Appends a zero position owned by the last left vertex.
DominationMapping extend_n(const DominationMapping& map);

// Same table, radius w + 1.
DominationMapping relax_w(const DominationMapping& map);

// Fixes x_vertex = 0 (0-based vertex), deletes its block from every image and
// its coordinate from every domain word.
DominationMapping shorten(const DominationMapping& map, int vertex);

// φ(x1, x2) = (φ1(x1), φ2(x2)); vertices of map2 follow those of map1.
DominationMapping product(const DominationMapping& map1, const DominationMapping& map2);

// Perfect (m, 2^m - 1, 1) mapping: φ(b(j)) = e_j, position j owned by the most
// significant set bit of b(j).
DominationMapping w1_perfect(int m);

// (2ℓ+1, 2^{ℓ+1}, 2) mapping built recursively from level 1 = small_3_4_2(3).
DominationMapping w2_recursive(int level);

}  // namespace domap

#endif  // DOMAP_CONSTRUCTIONS_HPP_
