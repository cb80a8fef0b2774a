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

#include "domap/lp.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "domap/errors.hpp"
#include "domap/simplex.hpp"

namespace domap {

namespace {

using Poly = std::vector<BigInt>;  // coefficients of t^0 .. t^w

Poly truncated_mul(const Poly& a, const Poly& b, int w) {
  Poly out(static_cast<std::size_t>(w) + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (1 + t)^size - 1, truncated at degree w.
Poly nonzero_block(int size, int w) {
  Poly p(static_cast<std::size_t>(w) + 1);
  for (int k = 1; k <= std::min(size, w); ++k) p[static_cast<std::size_t>(k)] = binomial(static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(k));
  return p;
}

}  // namespace

EquitableSplit equitable_split(int m, int n, int w) {
  if (m < 1 || n < m) throw DomainError("equitable split needs 1 <= m <= n");
  if (w < 0) throw DomainError("w must be nonnegative");
  EquitableSplit s;
  s.m = m;
  s.n = n;
  s.w = w;
  s.delta = n / m;
  s.m1 = n % m;
  s.m2 = m - s.m1;
  s.n1 = s.m1 * (s.delta + 1);
  s.n2 = s.m2 * s.delta;
  return s;
}

std::string to_string(const OrbitIndex& k) {
  return "(" + std::to_string(k.s1) + "," + std::to_string(k.s2) + "," + std::to_string(k.r1) + "," +
         std::to_string(k.r2) + ")";
}

std::vector<OrbitIndex> orbit_indices(const EquitableSplit& s) {
  std::vector<OrbitIndex> out;
  for (int s1 = 0; s1 <= s.m1; ++s1) {
    for (int s2 = 0; s2 <= s.m2; ++s2) {
      for (int r1 = 0; r1 <= std::min(s1, s.w); ++r1) {
        for (int r2 = 0; r2 <= std::min(s2, s.w - r1); ++r2) out.push_back({s1, s2, r1, r2});
      }
    }
  }
  return out;
}

BigInt coefficient_C(int r1, int r2, int delta, int w) {
  if (r1 < 0 || r2 < 0 || delta < 0 || w < 0) throw DomainError("coefficient_C: negative argument");
  if (r1 + r2 > w) return 0;
  Poly acc(static_cast<std::size_t>(w) + 1);
  acc[0] = 1;
  const Poly big = nonzero_block(delta + 1, w);
  const Poly small = nonzero_block(delta, w);
  for (int i = 0; i < r1; ++i) acc = truncated_mul(acc, big, w);
  for (int i = 0; i < r2; ++i) acc = truncated_mul(acc, small, w);
  BigInt total;
  for (const auto& c : acc) total += c;
  return total;
}

BigInt orbit_size(const OrbitIndex& k, const EquitableSplit& s) {
  auto c = [](int a, int b) { return binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)); };
  return c(s.m1, k.s1) * c(s.m2, k.s2) * c(k.s1, k.r1) * c(k.s2, k.r2) * coefficient_C(k.r1, k.r2, s.delta, s.w);
}

ReducedLP build_reduced_lp(int m, int n, int w) {
  ReducedLP lp;
  lp.split = equitable_split(m, n, w);
  const auto& s = lp.split;
  lp.omega = orbit_indices(s);
  for (int s1 = 0; s1 <= s.m1; ++s1) {
    for (int s2 = 0; s2 <= s.m2; ++s2) lp.s_rows.emplace_back(s1, s2);
  }
  for (int r1 = 0; r1 <= std::min(s.m1, w); ++r1) {
    for (int r2 = 0; r2 <= std::min(s.m2, w - r1); ++r2) lp.r_rows.emplace_back(r1, r2);
  }
  auto c = [](int a, int b) {
    return b < 0 ? BigInt(0) : binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  };
  std::vector<BigInt> cr;  // C_{ρ1ρ2} per column
  for (const auto& k : lp.omega) {
    cr.push_back(coefficient_C(k.r1, k.r2, s.delta, w));
    lp.objective.push_back(orbit_size(k, s));
  }
  for (const auto& [s1, s2] : lp.s_rows) {
    std::vector<BigInt> row(lp.omega.size());
    for (std::size_t j = 0; j < lp.omega.size(); ++j) {
      const auto& k = lp.omega[j];
      // Edges of orbit k at one fixed domain word of class (σ1, σ2).
      if (k.s1 == s1 && k.s2 == s2) row[j] = c(k.s1, k.r1) * c(k.s2, k.r2) * cr[j];
    }
    lp.astar.push_back(std::move(row));
  }
  for (const auto& [r1, r2] : lp.r_rows) {
    std::vector<BigInt> row(lp.omega.size());
    for (std::size_t j = 0; j < lp.omega.size(); ++j) {
      const auto& k = lp.omega[j];
      // Domain words of class (σ1, σ2) dominating one fixed range word.
      if (k.r1 == r1 && k.r2 == r2) row[j] = c(s.m1 - r1, k.s1 - r1) * c(s.m2 - r2, k.s2 - r2);
    }
    lp.astar.push_back(std::move(row));
  }
  return lp;
}

void dump_astar(std::ostream& out, const ReducedLP& lp) {
  out << lp.astar.size() << ' ' << lp.omega.size() << '\n';
  for (const auto& row : lp.astar) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << row[j].get_str();
    }
    out << '\n';
  }
}

std::string astar_string(const ReducedLP& lp) {
  std::ostringstream os;
  dump_astar(os, lp);
  return os.str();
}

LpSolution solve_reduced_lp(const ReducedLP& lp) {
  PackingLp p;
  for (const auto& row : lp.astar) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& v : row) r.emplace_back(v);
    p.a.push_back(std::move(r));
    p.b.emplace_back(1);
  }
  for (const auto& v : lp.objective) p.c.emplace_back(v);
  auto res = solve_packing_lp(p);
  return {std::move(res.optimum), std::move(res.x), res.pivots};
}

LpDecision decide_lp(int m, int n, int w) {
  const auto lp = build_reduced_lp(m, n, w);
  LpDecision d;
  d.optimum = solve_reduced_lp(lp).optimum;
  d.target = pow2(static_cast<std::uint64_t>(m));
  d.exists_equitable = d.optimum == Rational(d.target);
  return d;
}

}  // namespace domap
