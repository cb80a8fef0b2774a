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

#ifndef DOMAP_BOUNDS_HPP_
#define DOMAP_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domap/bigint.hpp"
#include "domap/graph.hpp"

namespace domap {

// 2^m <= |B(n, w)|: the cardinality condition every injection must meet.
bool check_sum_condition(int m, int n, int w);

// n >= 2m - w.
bool check_tight_condition(int m, int n, int w);

// Exact value of min over (t_1..t_Δ) of  s + floor(log2 |B(n - Σ i t_i, w)|),
// s = Σ t_i. For each s in [0, m-1] the minimizer removes the s vertices of
// largest degree, so only m candidates are evaluated.
std::int64_t general_bound_value(int w, const DominationGraph& g);

// True iff m does not exceed the shortening bound for g, i.e. no sequence of
// shortenings of a G-domination mapping would contradict the cardinality
// condition.
bool general_bound(int m, int w, const DominationGraph& g);

// True iff (m, n, w) sits on the line n = 2m - w with 0 <= w <= m, where any
// mapping must have degree distribution d_1 = w, d_2 = m - w.
bool optimal_degree_distribution(int m, int n, int w);

// Degrees (1 × w, 2 × (m - w)) in vertex order: the only distribution that
// can reach n = 2m - w.
std::vector<int> tight_degrees(int m, int w);

// Least n with 2^m <= |B(n, w)|.
std::int64_t min_n_for_cardinality(int m, int w);

// max(min_n_for_cardinality(m, w), 2m - w).
std::int64_t nu_lower_bound(int m, int w);

// μ(n, 1) = floor(log2(n + 1)).
int mu_of_w1(std::int64_t n);

struct KnownTriple {
  int m = 0;
  std::int64_t n = 0;
  int w = 0;
  std::string source;
};

// Parameter triples with an explicit construction or a verified fixture:
// identities (k, k, k), w = 1 perfect maps, the w = 2 recursion, and the
// search-found fixtures shipped in fixtures/.
std::vector<KnownTriple> default_base_triples(int max_m, int max_w);

// Upper bounds on ν(m, w) obtained from `base` by closing under
//   product:  (m1, n1, w1) × (m2, n2, w2) → (m1 + m2, n1 + n2, w1 + w2)
//   relax:    (m, n, w) → (m, n, w + 1)
//   shorten:  (m + 1, n, w) → (m, n - 1, w), or (m, n - 2, w) when
//             n = 2(m + 1) - w forces a degree-two vertex.
class UpperBoundTable {
 public:
  UpperBoundTable(int max_m, int max_w, const std::vector<KnownTriple>& base);

  // nullopt when (m, w) is unreachable from the base set.
  std::optional<std::int64_t> upper(int m, int w) const;
  int max_m() const { return max_m_; }
  int max_w() const { return max_w_; }

 private:
  int max_m_;
  int max_w_;
  std::vector<std::int64_t> best_;  // (max_m + 1) x (max_w + 1)
};

std::optional<std::int64_t> nu_upper_bound(int m, int w, const std::vector<KnownTriple>& base);
std::optional<std::int64_t> nu_upper_bound(int m, int w);

struct BoundReport {
  int m = 0;
  int n = 0;
  int w = 0;
  bool sum_condition_ok = false;
  bool tight_condition_ok = false;
  std::int64_t general_bound_value = 0;
  bool general_bound_ok = false;
  bool perfect = false;
};

// Evaluates all necessary conditions for (m, n, w) under graph g.
BoundReport bound_report(int m, int n, int w, const DominationGraph& g);

// Tab-separated line: m n w sum_ok tight_ok general_value general_ok perfect.
std::string to_tsv(const BoundReport& r);

}  // namespace domap

#endif  // DOMAP_BOUNDS_HPP_
