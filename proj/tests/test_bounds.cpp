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
#include <functional>
#include <numeric>

#include "domap/ball.hpp"
#include "domap/bounds.hpp"
#include "domap/errors.hpp"
#include "domap/matching.hpp"

using namespace domap;

namespace {

// Direct reading of the shortening bound: every (t_1..t_Δ) with t_i <= d_i
// must satisfy 2^(m - s) <= |B(n - Σ i t_i, w)|.
bool general_bound_oracle(int m, int w, const std::vector<int>& degrees) {
  const int top = *std::max_element(degrees.begin(), degrees.end());
  std::vector<int> d(static_cast<std::size_t>(top) + 1, 0);
  for (int v : degrees) ++d[static_cast<std::size_t>(v)];
  const int n = std::accumulate(degrees.begin(), degrees.end(), 0);
  std::vector<int> t(d.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == d.size()) {
      int s = 0, removed = 0;
      for (std::size_t k = 1; k < d.size(); ++k) {
        s += t[k];
        removed += static_cast<int>(k) * t[k];
      }
      if (m - s <= 0) return true;
      return pow2(static_cast<std::uint64_t>(m - s)) <= ball_size({n - removed, w});
    }
    for (int v = 0; v <= d[i]; ++v) {
      t[i] = v;
      if (!rec(i + 1)) return false;
    }
    t[i] = 0;
    return true;
  };
  return rec(1);
}

}  // namespace

TEST_CASE("sum condition") {
  CHECK(check_sum_condition(3, 4, 2));
  CHECK(check_sum_condition(12, 90, 2));
  CHECK(pow2(12) == ball_size({90, 2}));
  CHECK_FALSE(check_sum_condition(4, 4, 1));
}

TEST_CASE("tight condition") {
  CHECK(check_tight_condition(9, 15, 3));
  CHECK_FALSE(check_tight_condition(4, 5, 2));
  for (int m = 1; m <= 6; ++m) {
    for (int w = m; w <= 8; ++w) CHECK(check_tight_condition(m, m, w));
  }
}

TEST_CASE("general bound examples") {
  const int d122[] = {1, 2, 1};
  CHECK(general_bound(3, 2, DominationGraph::from_degrees(d122)));
  const int d222[] = {2, 2, 2};
  CHECK_FALSE(general_bound(3, 1, DominationGraph::from_degrees(d222)));
  CHECK_FALSE(general_bound_oracle(3, 1, {2, 2, 2}));
  // The s = 0 term is the cardinality condition.
  for (int n = 3; n <= 9; ++n) {
    const auto g = DominationGraph::equitable(3, n);
    const auto s0 = floor_log2(ball_size({n, 2}));
    CHECK(general_bound_value(2, g) <= s0);
  }
}

TEST_CASE("general bound agrees with exhaustive (t_i) enumeration") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = m; n <= 11; ++n) {
      for (int w = 1; w <= 3; ++w) {
        for (const auto& seq : degree_multisets(m, n, 1000)) {
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(w);
          CHECK(general_bound(m, w, DominationGraph::from_degrees(seq)) == general_bound_oracle(m, w, seq));
        }
      }
    }
  }
}

TEST_CASE("below 2m - w every degree sequence fails the general bound") {
  for (int w = 1; w <= 3; ++w) {
    for (int m = 1; m <= 7; ++m) {
      for (int n = m; n < 2 * m - w; ++n) {
        for (const auto& seq : degree_multisets(m, n, 1000)) {
          CHECK_FALSE(general_bound(m, w, DominationGraph::from_degrees(seq)));
        }
      }
    }
  }
}

TEST_CASE("lower bound on the least n") {
  for (int m = 1; m <= 20; ++m) CHECK(nu_lower_bound(m, 1) == (std::int64_t{1} << m) - 1);
  CHECK(nu_lower_bound(9, 3) == 15);
  CHECK(nu_lower_bound(12, 2) == 90);
  for (int m = 1; m <= 14; ++m) {
    for (int w = 1; w <= 4; ++w) {
      int n = 1;
      while (pow2(static_cast<std::uint64_t>(m)) > ball_size({n, w})) ++n;
      CHECK(min_n_for_cardinality(m, w) == n);
    }
  }
}

TEST_CASE("upper bound table") {
  for (int w = 3; w <= 8; ++w) {
    const auto up = nu_upper_bound(3 * w, w);
    REQUIRE(up.has_value());
    CHECK(*up <= 5 * w);
  }
  const auto u26 = nu_upper_bound(26, 8);
  REQUIRE(u26.has_value());
  CHECK(*u26 <= 44);
  for (int w = 1; w <= 6; ++w) {
    const int reach = std::max(30, 3 * w) + 1;
    const UpperBoundTable table(reach, w, default_base_triples(reach, w));
    for (int m = 1; m <= 30; ++m) {
      const auto up = table.upper(m, w);
      if (up) CHECK(nu_lower_bound(m, w) <= *up);
    }
  }
  // Two-sided agreement for w <= m <= 3w.
  for (int w = 3; w <= 8; ++w) {
    for (int m = w; m <= 3 * w; ++m) {
      CAPTURE(m);
      CAPTURE(w);
      CHECK(nu_lower_bound(m, w) == 2 * m - w);
      CHECK(nu_upper_bound(m, w) == std::optional<std::int64_t>(2 * m - w));
    }
  }
  CHECK(nu_upper_bound(5, 1) == std::optional<std::int64_t>(31));
  CHECK_FALSE(nu_upper_bound(3, 1, {}).has_value());
}

TEST_CASE("mu for w = 1") {
  CHECK(mu_of_w1(3) == 2);
  CHECK(mu_of_w1(7) == 3);
  CHECK(mu_of_w1(4) == 2);
  // Largest m with some mapping into B(n, 1), found by matching over all graphs.
  for (int n = 1; n <= 8; ++n) {
    int best = 0;
    for (int m = 1; m <= n; ++m) {
      if (decide_all_graphs(m, n, 1).exists) best = m;
    }
    CAPTURE(n);
    CHECK(mu_of_w1(n) == best);
  }
}

TEST_CASE("optimal degree distribution on n = 2m - w") {
  CHECK(optimal_degree_distribution(9, 15, 3));
  CHECK_FALSE(optimal_degree_distribution(9, 16, 3));
  CHECK(tight_degrees(5, 2) == std::vector<int>{1, 1, 2, 2, 2});
  // Every degree sequence that admits a mapping at n = 2m - w has w ones and
  // m - w twos.
  for (int w = 1; w <= 3; ++w) {
    for (int m = std::max(w, 2); m <= 5; ++m) {
      const int n = 2 * m - w;
      for (const auto& seq : degree_multisets(m, n, 1000)) {
        const auto d = decide_graph(DominationGraph::from_degrees(seq), w);
        if (d.exists) CHECK(seq == tight_degrees(m, w));
      }
    }
  }
}

TEST_CASE("bound report") {
  const auto g = DominationGraph::equitable(12, 90);
  const auto r = bound_report(12, 90, 2, g);
  CHECK(r.perfect);
  CHECK(r.sum_condition_ok);
  CHECK(r.tight_condition_ok);
  CHECK(r.general_bound_ok);
  CHECK(to_tsv(r).substr(0, 8) == "12\t90\t2\t");
  const auto r2 = bound_report(4, 5, 2, DominationGraph::equitable(4, 5));
  CHECK_FALSE(r2.tight_condition_ok);
  CHECK(r2.perfect);  // |B(5,2)| = 16 = 2^4, yet n < 2m - w rules the triple out
  CHECK(r2.sum_condition_ok);
  CHECK_THROWS_AS(bound_report(4, 6, 2, DominationGraph::equitable(4, 5)), DimensionError);
}
