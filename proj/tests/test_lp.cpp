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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "domap/ball.hpp"
#include "domap/compatibility.hpp"
#include "domap/errors.hpp"
#include "domap/lp.hpp"
#include "domap/matching.hpp"
#include "domap/symmetry.hpp"

using namespace domap;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DOMAP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Words made of r1 blocks of width delta+1 and r2 blocks of width delta, every
// block nonzero and total weight at most w, counted by enumeration.
long brute_C(int r1, int r2, int delta, int w) {
  std::vector<int> widths(static_cast<std::size_t>(r1), delta + 1);
  widths.insert(widths.end(), static_cast<std::size_t>(r2), delta);
  int len = 0;
  for (int b : widths) len += b;
  long count = 0;
  for (unsigned long z = 0; z < (1UL << len); ++z) {
    if (__builtin_popcountl(z) > w) continue;
    bool ok = true;
    int shift = 0;
    for (int b : widths) {
      ok = ok && ((z >> shift) & ((1UL << b) - 1)) != 0;
      shift += b;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("reduced constraint matrices match the reference fixtures") {
  CHECK(astar_string(build_reduced_lp(2, 4, 1)) == slurp("astar_2_4_1.txt"));
  CHECK(astar_string(build_reduced_lp(3, 4, 2)) == slurp("astar_3_4_2.txt"));
}

TEST_CASE("equitable split") {
  const auto s = equitable_split(3, 4, 2);
  CHECK(s.delta == 1);
  CHECK(s.m1 == 1);
  CHECK(s.m2 == 2);
  CHECK(s.n1 == 2);
  CHECK(s.n2 == 2);
  CHECK_THROWS_AS(equitable_split(5, 4, 2), DomainError);
}

TEST_CASE("coefficient C against enumeration") {
  for (int delta = 1; delta <= 3; ++delta) {
    for (int w = 0; w <= 3; ++w) {
      for (int r1 = 0; r1 <= 3; ++r1) {
        for (int r2 = 0; r2 <= 3; ++r2) {
          if (r1 * (delta + 1) + r2 * delta > 16) continue;
          CAPTURE(r1);
          CAPTURE(r2);
          CAPTURE(delta);
          CAPTURE(w);
          CHECK(coefficient_C(r1, r2, delta, w) == brute_C(r1, r2, delta, w));
        }
      }
    }
  }
  CHECK(coefficient_C(0, 0, 5, 0) == 1);
  CHECK(coefficient_C(2, 1, 1, 2) == 0);
}

TEST_CASE("orbits partition the compatibility edges") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 9; ++n) {
      for (int w = 0; w <= 3; ++w) {
        const auto lp = build_reduced_lp(m, n, w);
        BigInt total;
        for (const auto& v : lp.objective) total += v;
        CHECK(total == count_compatibility_edges(DominationGraph::equitable(m, n), w));
      }
    }
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 7; ++n) {
      for (int w = 0; w <= 2; ++w) {
        const FullLp full(m, n, w);
        const auto lp = build_reduced_lp(m, n, w);
        std::vector<BigInt> seen(lp.omega.size());
        for (std::size_t e = 0; e < full.edge_count(); ++e) {
          const auto it = std::find(lp.omega.begin(), lp.omega.end(), full.edge_orbit(e));
          REQUIRE(it != lp.omega.end());
          seen[static_cast<std::size_t>(it - lp.omega.begin())] += 1;
        }
        CHECK(seen == lp.objective);
      }
    }
  }
}

TEST_CASE("orbit sizes") {
  const auto a = equitable_split(2, 4, 1);
  CHECK(orbit_size({0, 1, 0, 1}, a) == 4);
  CHECK(orbit_size({0, 0, 0, 0}, a) == 1);
  const auto b = equitable_split(3, 4, 2);
  // One choice of domain class, three nonzero words on the width-2 block.
  CHECK(orbit_size({1, 0, 1, 0}, b) == 3);
  CHECK(orbit_size({0, 0, 0, 0}, b) == 1);
}

TEST_CASE("reduced LP optima") {
  auto d = decide_lp(2, 4, 1);
  CHECK(d.exists_equitable);
  CHECK(d.optimum == 4);
  d = decide_lp(3, 4, 2);
  CHECK(d.exists_equitable);
  CHECK(d.optimum == 8);
  d = decide_lp(4, 5, 2);
  CHECK_FALSE(d.exists_equitable);
  CHECK(d.optimum < 16);
  for (const auto& [m, n, w] : std::vector<std::array<int, 3>>{{4, 6, 2}, {6, 11, 2}, {8, 23, 2}, {11, 23, 3}}) {
    d = decide_lp(m, n, w);
    CHECK(d.exists_equitable);
    CHECK(d.target == pow2(static_cast<std::uint64_t>(m)));
  }
}

TEST_CASE("reduced LP optimum equals the maximum matching") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = m; n <= m + 6; ++n) {
      for (int w = 0; w <= 3; ++w) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(w);
        const CompatibilityGraph h(DominationGraph::equitable(m, n), w);
        const auto opt = solve_reduced_lp(build_reduced_lp(m, n, w)).optimum;
        CHECK(opt == Rational(static_cast<long>(max_matching(h).size)));
      }
    }
  }
}

TEST_CASE("lifted reduced solution is feasible for the full LP") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 7; ++n) {
      for (int w = 0; w <= 2; ++w) {
        const auto lp = build_reduced_lp(m, n, w);
        const auto sol = solve_reduced_lp(lp);
        const FullLp full(m, n, w);
        std::vector<Rational> x(full.edge_count());
        for (std::size_t e = 0; e < x.size(); ++e) {
          const auto it = std::find(lp.omega.begin(), lp.omega.end(), full.edge_orbit(e));
          x[e] = sol.x[static_cast<std::size_t>(it - lp.omega.begin())];
        }
        CHECK(full.feasible(x));
        CHECK(full.objective(x) == sol.optimum);
      }
    }
  }
}

TEST_CASE("a fractional point of the (2,4,1) LP") {
  const FullLp full(2, 4, 1);
  REQUIRE(full.edge_count() == 12);
  const Rational h(1, 2);
  const Rational q(1, 4);
  const std::vector<Rational> x = {1, 0, h, h, 0, h, h, 0, q, q, q, q};
  CHECK(full.feasible(x));
  CHECK(full.objective(x) == 4);
  CHECK(is_orbit_regular(full, x));
  const auto sums = full.row_sums(x);
  for (std::size_t r = 0; r < 4; ++r) CHECK(sums[r] == 1);
}
