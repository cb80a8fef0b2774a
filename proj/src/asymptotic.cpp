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

#include "domap/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "domap/ball.hpp"
#include "domap/errors.hpp"

namespace domap {

namespace {

std::uint64_t word_mask(const Word& v, const DominationGraph& g) {
  if (static_cast<int>(v.size()) != g.m()) throw DimensionError("domain word length differs from m");
  if (g.m() > 63) throw ResourceError("domain words are limited to 63 positions here");
  return v.to_index();
}

std::set<std::uint64_t> as_set(std::span<const std::uint64_t> x, int m) {
  if (m < 1 || m > 30) throw DomainError("subset families need 1 <= m <= 30");
  std::set<std::uint64_t> s(x.begin(), x.end());
  if (!s.empty() && *s.rbegin() >= (std::uint64_t{1} << m)) throw DomainError("domain word out of range");
  return s;
}

std::uint64_t bit_of(int vertex, int m) { return std::uint64_t{1} << (m - 1 - vertex); }

}  // namespace

BigInt psi(const Word& v, const DominationGraph& g, int w) {
  const std::uint64_t mask = word_mask(v, g);
  const int m = g.m();
  std::vector<BigInt> acc(static_cast<std::size_t>(w) + 1);
  acc[0] = 1;
  for (int i = 0; i < m; ++i) {
    if (!(mask & bit_of(i, m))) continue;
    const auto d = static_cast<std::uint64_t>(g.block(i).size());
    std::vector<BigInt> next(acc.size());
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t k = 1; a + k < acc.size() && k <= d; ++k) next[a + k] += acc[a] * binomial(d, k);
    }
    acc = std::move(next);
  }
  BigInt total;
  for (const auto& c : acc) total += c;
  return total;
}

std::uint64_t psi_brute(const Word& v, const DominationGraph& g, int w, std::uint64_t max_ball) {
  const std::uint64_t mask = word_mask(v, g);
  const int m = g.m();
  const BallIndexer ball({g.n(), w});
  if (ball.size() > max_ball) throw ResourceError("ball too large for brute-force psi");
  std::vector<Word> descendants;
  for (std::uint64_t sub = mask; sub != 0;) {
    sub = (sub - 1) & mask;
    descendants.push_back(Word::from_index(sub, static_cast<std::size_t>(m)));
    if (sub == 0) break;
  }
  std::uint64_t count = 0;
  for (std::uint64_t r = 0; r < ball.size(); ++r) {
    const Word y = ball.unrank(r);
    if (!dominates(v, y, g)) continue;
    const bool shared = std::any_of(descendants.begin(), descendants.end(),
                                    [&](const Word& u) { return dominates(u, y, g); });
    if (!shared) ++count;
  }
  return count;
}

BigInt psi_top_weight(int j, int delta, int w) {
  if (j < 0 || j > w || delta < 0) throw DomainError("psi_top_weight needs 0 <= j <= w");
  BigInt a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(delta), static_cast<unsigned long>(j));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(delta) + 1, static_cast<unsigned long>(w - j));
  return a * b;
}

BigInt psi_sum(std::span<const std::uint64_t> words, const DominationGraph& g, int w) {
  BigInt total;
  for (const auto x : words) total += psi(Word::from_index(x, static_cast<std::size_t>(g.m())), g, w);
  return total;
}

std::uint64_t xi(const CompatibilityGraph& h, std::span<const std::uint64_t> u, std::span<const std::uint64_t> v) {
  std::vector<std::uint64_t> both(u.begin(), u.end());
  both.insert(both.end(), v.begin(), v.end());
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  return h.neighborhood_size(both) - h.neighborhood_size(u);
}

bool is_d_closed(std::span<const std::uint64_t> x, int m) {
  const auto s = as_set(x, m);
  for (const auto u : s) {
    for (int i = 0; i < m; ++i) {
      if ((u & bit_of(i, m)) && !s.count(u & ~bit_of(i, m))) return false;
    }
  }
  return true;
}

bool is_i_balanced(std::span<const std::uint64_t> x, int m, int i) {
  if (i < 0 || i > m) throw DomainError("balance index must lie in [0, m]");
  const auto s = as_set(x, m);
  if (i == 0) return true;
  const std::uint64_t tail = (std::uint64_t{1} << (m - i)) - 1;
  for (const auto u : s) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << i); ++a) {
      if (!s.count((a << (m - i)) | (u & tail))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> closure(std::span<const std::uint64_t> x, int m) {
  auto s = as_set(x, m);
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto u : s) {
      for (int i = 0; i < m && !moved; ++i) {
        const std::uint64_t v = u & ~bit_of(i, m);
        if ((u & bit_of(i, m)) && !s.count(v)) {
          s.erase(u);
          s.insert(v);
          moved = true;
        }
      }
      if (moved) break;
    }
  }
  return {s.begin(), s.end()};
}

std::optional<std::vector<std::uint64_t>> minimum_bad_set(const CompatibilityGraph& h, int balanced) {
  const int m = h.graph().m();
  if (m > 5) throw ResourceError("bad-set search is limited to m <= 5");
  const std::uint64_t words = std::uint64_t{1} << m;
  std::optional<std::vector<std::uint64_t>> best;
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t, std::uint64_t)> walk = [&](std::uint64_t u, std::uint64_t in) {
    if (u == words) {
      if (cur.empty() || (best && cur.size() >= best->size())) return;
      if (!is_i_balanced(cur, m, balanced)) return;
      if (h.neighborhood_size(cur) < cur.size()) best = cur;
      return;
    }
    bool can_add = true;
    for (int i = 0; i < m; ++i) {
      if ((u & bit_of(i, m)) && !((in >> (u & ~bit_of(i, m))) & 1U)) can_add = false;
    }
    if (can_add) {
      cur.push_back(u);
      walk(u + 1, in | (std::uint64_t{1} << u));
      cur.pop_back();
    }
    walk(u + 1, in);
  };
  walk(0, 0);
  return best;
}

std::vector<std::uint64_t> maximal_support_words(std::span<const std::uint64_t> x, int m) {
  const auto s = as_set(x, m);
  std::vector<std::uint64_t> out;
  for (const auto v : s) {
    const bool dominated = std::any_of(s.begin(), s.end(), [&](std::uint64_t u) { return u != v && (v & ~u) == 0; });
    if (!dominated) out.push_back(v);
  }
  return out;
}

BigInt cond1_rhs(int m, int w) {
  if (w < 1 || m < w) throw DomainError("cond1 needs m >= w >= 1");
  BigInt sum;
  for (int j = 0; j < w; ++j) sum += binomial(static_cast<std::uint64_t>(m - w), static_cast<std::uint64_t>(j));
  return pow2(static_cast<std::uint64_t>(2 * w - 1)) * sum;
}

bool check_cond1(int m, const BigInt& delta, int w) {
  if (delta < 0) throw DomainError("delta must be nonnegative");
  BigInt lhs;
  mpz_pow_ui(lhs.get_mpz_t(), delta.get_mpz_t(), static_cast<unsigned long>(w));
  return lhs >= cond1_rhs(m, w);
}

BigInt cond1_min_delta(int m, int w) {
  const BigInt rhs = cond1_rhs(m, w);
  BigInt d;
  mpz_root(d.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(w));  // floor of the w-th root
  while (d > 1 && check_cond1(m, d - 1, w)) d -= 1;
  while (d < 1 || !check_cond1(m, d, w)) d += 1;
  return d;
}

BigInt n_epsilon(double epsilon, LogBase base) {
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  const long double a = static_cast<long double>(epsilon) / (1.0L + epsilon);
  const long double c = base == LogBase::kNatural ? 1.0L : 1.0L / std::log(2.0L);
  // With t = ln m the inequality reads e^(a t) >= 1 + c t. The left side
  // minus the right is 0 at t = 0, decreasing up to t* = ln(c / a) / a and
  // increasing afterwards, so the admissible m form [1] ∪ [root, ∞).
  auto gap = [&](long double t) { return std::exp(a * t) - 1.0L - c * t; };
  const long double t_star = std::log(c / a) / a;
  long double lo = t_star;
  long double hi = t_star + 1.0L;
  while (gap(hi) < 0) {
    lo = hi;
    hi = t_star + 2.0L * (hi - t_star);
  }
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    (gap(mid) < 0 ? lo : hi) = mid;
  }
  const long double root = std::exp(hi);
  if (!(root < 1e300L)) throw DomainError("N_epsilon is out of range for this epsilon");
  BigInt n(static_cast<double>(std::ceil(root)));
  if (root < 1e15L) {
    // Settle rounding at the boundary on exact integers.
    auto holds = [&](const BigInt& v) {
      const long double mv = static_cast<long double>(v.get_d());
      return std::pow(mv, a) >= 1.0L + c * std::log(mv);
    };
    const long double m_star = std::exp(t_star);
    while (n > 1 && static_cast<long double>(n.get_d()) - 1 >= m_star && holds(n - 1)) n -= 1;
    while (!holds(n)) n += 1;
  }
  return n;
}

Cond2Report check_cond2(int m, int delta, int w, double epsilon, LogBase base) {
  if (w < 3) throw DomainError("cond2 needs w >= 3");
  if (m < 1 || delta < 1) throw DomainError("cond2 needs m >= 1 and delta >= 1");
  Cond2Report r;
  r.n_eps = n_epsilon(epsilon, base);
  r.size_ok = static_cast<long double>(m) >= std::pow(2.0L * w, 1.0L + epsilon);
  r.n_epsilon_ok = BigInt(m) >= r.n_eps;
  r.necessary_ok = pow2(static_cast<std::uint64_t>(m)) <=
                   ball_size({m * delta, w});
  r.holds = r.size_ok && r.n_epsilon_ok && r.necessary_ok;
  r.cond1 = m >= w && check_cond1(m, BigInt(delta), w);
  return r;
}

}  // namespace domap
