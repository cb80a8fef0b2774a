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

#include "domap/bounds.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "domap/ball.hpp"
#include "domap/errors.hpp"

namespace domap {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

void require_params(int m, int n, int w) {
  if (m < 1 || n < 1 || w < 0) throw DomainError("need m >= 1, n >= 1, w >= 0");
}

}  // namespace

bool check_sum_condition(int m, int n, int w) {
  require_params(m, n, w);
  return pow2(static_cast<std::uint64_t>(m)) <= ball_size({n, w});
}

bool check_tight_condition(int m, int n, int w) {
  require_params(m, n, w);
  return static_cast<std::int64_t>(n) >= 2 * static_cast<std::int64_t>(m) - w;
}

std::int64_t general_bound_value(int w, const DominationGraph& g) {
  auto seq = g.degree_sequence();
  std::sort(seq.rbegin(), seq.rend());
  std::int64_t best = kInf;
  int remaining = g.n();
  for (int s = 0; s < g.m(); ++s) {
    if (s > 0) remaining -= seq[static_cast<std::size_t>(s - 1)];
    best = std::min(best, s + floor_log2(ball_size({remaining, w})));
  }
  return best;
}

bool general_bound(int m, int w, const DominationGraph& g) {
  if (m != g.m()) throw DimensionError("general_bound: m differs from the graph");
  return m <= general_bound_value(w, g);
}

bool optimal_degree_distribution(int m, int n, int w) {
  return w >= 0 && w <= m && n == 2 * m - w;
}

std::vector<int> tight_degrees(int m, int w) {
  if (w < 0 || w > m) throw DomainError("tight_degrees needs 0 <= w <= m");
  std::vector<int> d(static_cast<std::size_t>(m), 2);
  std::fill(d.begin(), d.begin() + w, 1);
  return d;
}

std::int64_t min_n_for_cardinality(int m, int w) {
  if (m < 1 || w < 1) throw DomainError("need m >= 1 and w >= 1");
  if (m > 62) throw DomainError("m > 62 is outside the supported range");
  const BigInt target = pow2(static_cast<std::uint64_t>(m));
  auto ok = [&](std::int64_t n) { return ball_size({static_cast<int>(n), w}) >= target; };
  std::int64_t hi = 1;
  while (!ok(hi)) hi *= 2;
  std::int64_t lo = hi / 2;  // !ok(lo) unless hi == 1
  if (hi == 1) return 1;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::int64_t nu_lower_bound(int m, int w) {
  return std::max<std::int64_t>(min_n_for_cardinality(m, w), 2 * static_cast<std::int64_t>(m) - w);
}

int mu_of_w1(std::int64_t n) {
  if (n < 1) throw DomainError("mu_of_w1 needs n >= 1");
  return static_cast<int>(floor_log2(BigInt(std::to_string(n + 1))));
}

std::vector<KnownTriple> default_base_triples(int max_m, int max_w) {
  std::vector<KnownTriple> out;
  for (int k = 1; k <= std::min(max_m, max_w); ++k) out.push_back({k, k, k, "identity"});
  if (max_w >= 1) {
    for (int k = 1; k <= std::min(max_m, 62); ++k) {
      out.push_back({k, (std::int64_t{1} << k) - 1, 1, "w1_perfect"});
    }
  }
  if (max_w >= 2) {
    for (int level = 1; 2 * level + 1 <= std::min(max_m, 61); ++level) {
      out.push_back({2 * level + 1, std::int64_t{1} << (level + 1), 2, "w2_recursive"});
    }
  }
  const KnownTriple fixtures[] = {
      {4, 6, 2, "fixture dmap_4_6_2"},     {6, 11, 2, "fixture dmap_6_11_2"},
      {8, 23, 2, "fixture dmap_8_23_2"},   {10, 45, 2, "fixture dmap_10_45_2"},
      {12, 90, 2, "fixture dmap_12_90_2"}, {11, 23, 3, "fixture dmap_11_23_3"},
      {9, 15, 3, "fixture dmap_9_15_3"},   {12, 20, 4, "fixture dmap_12_20_4"},
      {13, 22, 4, "fixture dmap_13_22_4"}, {15, 25, 5, "fixture dmap_15_25_5"},
  };
  for (const auto& t : fixtures) {
    if (t.m <= max_m && t.w <= max_w) out.push_back(t);
  }
  return out;
}

UpperBoundTable::UpperBoundTable(int max_m, int max_w, const std::vector<KnownTriple>& base)
    : max_m_(max_m), max_w_(max_w) {
  if (max_m < 1 || max_w < 1) throw DomainError("upper-bound table needs max_m, max_w >= 1");
  const auto cols = static_cast<std::size_t>(max_w) + 1;
  best_.assign((static_cast<std::size_t>(max_m) + 1) * cols, kInf);
  auto at = [&](int m, int w) -> std::int64_t& { return best_[static_cast<std::size_t>(m) * cols + w]; };
  for (const auto& t : base) {
    if (t.m >= 1 && t.m <= max_m && t.w >= 1 && t.w <= max_w) at(t.m, t.w) = std::min(at(t.m, t.w), t.n);
  }
  // Every rule only lowers entries and all entries are bounded below, so
  // repeated sweeps reach a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    auto improve = [&](int m, int w, std::int64_t n) {
      if (n < at(m, w)) {
        at(m, w) = n;
        changed = true;
      }
    };
    for (int m = 1; m <= max_m; ++m) {
      for (int w = 1; w <= max_w; ++w) {
        if (w > 1 && at(m, w - 1) < kInf) improve(m, w, at(m, w - 1));
        for (int m1 = 1; m1 < m; ++m1) {
          for (int w1 = 1; w1 < w; ++w1) {
            const auto a = at(m1, w1);
            const auto b = at(m - m1, w - w1);
            if (a < kInf && b < kInf) improve(m, w, a + b);
          }
        }
        if (m < max_m && at(m + 1, w) < kInf) {
          const auto bigger = at(m + 1, w);
          const bool forced_pairs = bigger == 2 * static_cast<std::int64_t>(m + 1) - w && m + 1 > w;
          improve(m, w, bigger - (forced_pairs ? 2 : 1));
        }
      }
    }
  }
}

std::optional<std::int64_t> UpperBoundTable::upper(int m, int w) const {
  if (m < 1 || m > max_m_ || w < 1 || w > max_w_) throw DomainError("upper-bound query outside the table");
  const auto v = best_[static_cast<std::size_t>(m) * (static_cast<std::size_t>(max_w_) + 1) + w];
  if (v >= kInf) return std::nullopt;
  return v;
}

std::optional<std::int64_t> nu_upper_bound(int m, int w, const std::vector<KnownTriple>& base) {
  int max_m = m;
  for (const auto& t : base) {
    if (t.w <= w) max_m = std::max(max_m, t.m);
  }
  return UpperBoundTable(max_m, w, base).upper(m, w);
}

std::optional<std::int64_t> nu_upper_bound(int m, int w) {
  const int reach = std::max(m, 3 * w);
  return nu_upper_bound(m, w, default_base_triples(reach, w));
}

BoundReport bound_report(int m, int n, int w, const DominationGraph& g) {
  if (g.m() != m || g.n() != n) throw DimensionError("bound_report: graph does not match (m, n)");
  BoundReport r;
  r.m = m;
  r.n = n;
  r.w = w;
  r.sum_condition_ok = check_sum_condition(m, n, w);
  r.tight_condition_ok = check_tight_condition(m, n, w);
  r.general_bound_value = general_bound_value(w, g);
  r.general_bound_ok = m <= r.general_bound_value;
  r.perfect = pow2(static_cast<std::uint64_t>(m)) == ball_size({n, w});
  return r;
}

std::string to_tsv(const BoundReport& r) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::to_string(r.m) + '\t' + std::to_string(r.n) + '\t' + std::to_string(r.w) + '\t' +
         b(r.sum_condition_ok) + '\t' + b(r.tight_condition_ok) + '\t' + std::to_string(r.general_bound_value) +
         '\t' + b(r.general_bound_ok) + '\t' + b(r.perfect);
}

}  // namespace domap
