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

#ifndef DOMAP_SIMPLEX_HPP_
#define DOMAP_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "domap/bigint.hpp"

namespace domap {

// maximize c·x  subject to  A x <= b, x >= 0, with b >= 0 so the slack basis
// is a feasible start. All arithmetic is exact.
struct PackingLp {
  std::vector<std::vector<Rational>> a;  // rows × cols
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct SimplexResult {
  Rational optimum;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// Dantzig pricing until the first degenerate pivot, Bland's rule afterwards,
// which rules out cycling. Throws DomainError on negative b or unbounded
// objective.
SimplexResult solve_packing_lp(const PackingLp& lp);

}  // namespace domap

#endif  // DOMAP_SIMPLEX_HPP_
