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

#include <cmath>
#include <array>
#include <map>
#include <random>
#include <set>

#include "domap/asymptotic.hpp"
#include "domap/ball.hpp"
#include "domap/compatibility.hpp"
#include "domap/errors.hpp"
#include "domap/matching.hpp"

using namespace domap;

namespace {

std::vector<std::uint64_t> all_words(int m) {
  std::vector<std::uint64_t> out(std::size_t{1} << m);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::uint64_t> subset(std::uint64_t mask, int m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << m); ++u) {
    if ((mask >> u) & 1U) out.push_back(u);
  }
  return out;
}

// Least m >= 2 after which m^(a) >= 1 + c ln m holds up to `limit`.
long brute_n_epsilon(double eps, double c, long limit) {
  const double a = eps / (1 + eps);
  long last_bad = 1;
  for (long m = 2; m <= limit; ++m) {
    if (std::pow(static_cast<double>(m), a) < 1 + c * std::log(static_cast<double>(m))) last_bad = m;
  }
  return last_bad + 1;
}

}  // namespace

TEST_CASE("psi agrees with enumeration") {
  for (int m = 1; m <= 6; ++m) {
    for (int delta = 1; delta <= 3; ++delta) {
      for (int extra = 0; extra < m; extra += std::max(1, m - 1)) {
        const auto g = DominationGraph::equitable(m, m * delta + extra);
        for (int w = 0; w <= 3; ++w) {
          CAPTURE(m);
          CAPTURE(delta);
          CAPTURE(extra);
          CAPTURE(w);
          BigInt total;
          for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
            const auto word = Word::from_index(v, static_cast<std::size_t>(m));
            const BigInt p = psi(word, g, w);
            CHECK(p == psi_brute(word, g, w));
            total += p;
          }
          BigInt ball;
          for (int j = 0; j <= w; ++j) ball += binomial(static_cast<std::uint64_t>(g.n()), static_cast<std::uint64_t>(j));
          CHECK(total == ball);
          const auto words = all_words(m);
          CHECK(psi_sum(words, g, w) == total);
        }
      }
    }
  }
}

TEST_CASE("psi of top-weight words") {
  const int m = 5;
  const int delta = 2;
  const auto g = DominationGraph::equitable(m, m * delta + 2);  // two blocks of size 3
  for (int w = 1; w <= 3; ++w) {
    for (std::uint64_t v = 0; v < 32; ++v) {
      if (__builtin_popcountll(v) != w) continue;
      const auto word = Word::from_index(v, m);
      int small = 0;
      for (auto i : word.support()) {
        int size = 0;
        for (int p = 0; p < g.n(); ++p) size += g.owner(static_cast<std::size_t>(p)) == static_cast<int>(i);
        small += size == delta;
      }
      CHECK(psi(word, g, w) == psi_top_weight(small, delta, w));
    }
  }
}

TEST_CASE("psi on regular graphs depends only on weight") {
  const auto g = DominationGraph::equitable(5, 10);
  std::map<std::size_t, BigInt> by_weight;
  for (std::uint64_t v = 0; v < 32; ++v) {
    const auto word = Word::from_index(v, 5);
    const auto p = psi(word, g, 3);
    const auto [it, inserted] = by_weight.emplace(word.weight(), p);
    if (!inserted) CHECK(it->second == p);
  }
  CHECK(by_weight.at(0) == 1);
  CHECK(by_weight.at(1) == 3);  // 01, 10, 11
  CHECK(by_weight.at(4) == 0);
}

TEST_CASE("xi") {
  const CompatibilityGraph h(DominationGraph::equitable(3, 4), 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = subset(rng() & 0xff, 3);
    const auto b = subset(rng() & 0xff, 3);
    const auto v = subset(rng() & 0xff, 3);
    std::vector<std::uint64_t> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const std::vector<std::uint64_t> none;
    CHECK(xi(h, none, v) == h.neighborhood_size(v));
    // Supermodularity of the uncovered part: adding to U can only shrink Ξ.
    CHECK(xi(h, ab, v) <= xi(h, a, v));
  }
}

TEST_CASE("d-closed and balanced sets") {
  const std::vector<std::uint64_t> down = {0, 1, 2, 3};
  CHECK(is_d_closed(down, 3));
  const std::vector<std::uint64_t> lone = {5};
  CHECK_FALSE(is_d_closed(lone, 3));
  CHECK(closure(lone, 3) == std::vector<std::uint64_t>{0});
  for (std::uint64_t u = 0; u < 8; ++u) {
    const std::vector<std::uint64_t> one = {u};
    CHECK(closure(one, 3) == std::vector<std::uint64_t>{0});
  }
  // {000, 001, 100, 101} splits as a × b with a over vertex 0, so it is
  // 1-balanced but not 2-balanced.
  const std::vector<std::uint64_t> prod = {0, 1, 4, 5};
  CHECK(is_i_balanced(prod, 3, 1));
  CHECK_FALSE(is_i_balanced(prod, 3, 2));
  CHECK(maximal_support_words(down, 3) == std::vector<std::uint64_t>{3});
  CHECK(maximal_support_words(prod, 3) == std::vector<std::uint64_t>{5});
}

TEST_CASE("closure never enlarges the neighbourhood") {
  std::mt19937_64 rng(11);
  for (const auto& [m, n, w] : std::vector<std::array<int, 3>>{{3, 4, 1}, {4, 5, 2}, {4, 7, 1}}) {
    const CompatibilityGraph h(DominationGraph::equitable(m, n), w);
    for (int t = 0; t < 100; ++t) {
      const auto x = subset(rng() & ((std::uint64_t{1} << (1 << m)) - 1), m);
      const auto c = closure(x, m);
      CHECK(c.size() == x.size());
      CHECK(is_d_closed(c, m));
      CHECK(h.neighborhood_size(c) <= h.neighborhood_size(x));
    }
  }
}

TEST_CASE("removing a maximal word frees exactly its psi") {
  for (const auto& [m, n, w] : std::vector<std::array<int, 3>>{{3, 4, 1}, {3, 5, 2}, {4, 6, 2}}) {
    const auto g = DominationGraph::equitable(m, n);
    const CompatibilityGraph h(g, w);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (1 << m)); mask += 97) {
      const auto x = closure(subset(mask, m), m);
      for (const auto v : maximal_support_words(x, m)) {
        std::vector<std::uint64_t> rest;
        for (const auto u : x) {
          if (u != v) rest.push_back(u);
        }
        const std::vector<std::uint64_t> single = {v};
        CHECK(BigInt(static_cast<unsigned long>(xi(h, rest, single))) ==
              psi(Word::from_index(v, static_cast<std::size_t>(m)), g, w));
      }
    }
  }
}

TEST_CASE("minimum bad sets against exhaustive search") {
  for (const auto& [n, w] : std::vector<std::array<int, 2>>{{3, 1}, {4, 1}, {3, 2}, {5, 1}}) {
    const CompatibilityGraph h(DominationGraph::equitable(3, n), w);
    for (int bal = 0; bal <= 3; ++bal) {
      std::size_t best = 0;
      for (std::uint64_t mask = 1; mask < 256; ++mask) {
        const auto x = subset(mask, 3);
        if (!is_d_closed(x, 3) || !is_i_balanced(x, 3, bal)) continue;
        if (h.neighborhood_size(x) >= x.size()) continue;
        if (best == 0 || x.size() < best) best = x.size();
      }
      const auto got = minimum_bad_set(h, bal);
      CAPTURE(n);
      CAPTURE(w);
      CAPTURE(bal);
      if (best == 0) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(got->size() == best);
        CHECK(h.neighborhood_size(*got) < got->size());
      }
    }
  }
  const CompatibilityGraph perfect(DominationGraph::equitable(3, 4), 2);
  CHECK_FALSE(minimum_bad_set(perfect, 0).has_value());
  const CompatibilityGraph big(DominationGraph::equitable(6, 6), 1);
  CHECK_THROWS_AS(minimum_bad_set(big, 0), ResourceError);
}

TEST_CASE("maximal words of a smallest balanced bad set") {
  // Empirical only: maximal words are all ones on the balanced prefix and
  // heavier than w.
  int instances = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 2 * m + 1; ++n) {
      for (int w = 1; w <= 2; ++w) {
        const auto g = DominationGraph::equitable(m, n);
        const CompatibilityGraph h(g, w);
        for (int bal = 0; bal <= m; ++bal) {
          const auto x = minimum_bad_set(h, bal);
          if (!x) continue;
          ++instances;
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(w);
          CAPTURE(bal);
          const std::uint64_t prefix = ((std::uint64_t{1} << bal) - 1) << (m - bal);
          for (const auto v : maximal_support_words(*x, m)) {
            CHECK((v & prefix) == prefix);
            CHECK(__builtin_popcountll(v) > w);
          }
        }
      }
    }
  }
  CHECK(instances > 0);
}

TEST_CASE("first sufficient condition") {
  // w = 1: the right side is 2, so δ >= 2.
  for (int m = 1; m <= 10; ++m) {
    CHECK(cond1_rhs(m, 1) == 2);
    CHECK(cond1_min_delta(m, 1) == 2);
  }
  // 2^5 (1 + 17 + 136) = 4928, and 17^3 < 4928 <= 18^3.
  CHECK(cond1_rhs(20, 3) == 4928);
  CHECK(cond1_min_delta(20, 3) == 18);
  CHECK_FALSE(check_cond1(20, 17, 3));
  CHECK(check_cond1(20, 18, 3));
  CHECK_THROWS_AS(cond1_rhs(2, 3), DomainError);
}

TEST_CASE("necessary part of the second condition") {
  for (int m = 4; m <= 30; m += 2) {
    for (int delta = 1; delta <= 6; ++delta) {
      for (int w = 3; w <= 4; ++w) {
        BigInt ball;
        for (int j = 0; j <= w; ++j) ball += binomial(static_cast<std::uint64_t>(delta * m), static_cast<std::uint64_t>(j));
        const auto r = check_cond2(m, delta, w, 1.0);
        CHECK(r.necessary_ok == (pow2(static_cast<std::uint64_t>(m)) <= ball));
        CHECK(r.cond1 == check_cond1(m, delta, w));
        if (r.holds) CHECK((r.size_ok && r.n_epsilon_ok && r.necessary_ok));
      }
    }
  }
}

TEST_CASE("N epsilon") {
  for (double eps : {0.5, 1.0, 2.0}) {
    CAPTURE(eps);
    CHECK(n_epsilon(eps) == brute_n_epsilon(eps, 1.0, 2'000'000));
    CHECK(n_epsilon(eps, LogBase::kBinary) == brute_n_epsilon(eps, 1.0 / std::log(2.0), 2'000'000));
  }
  CHECK(n_epsilon(1.0) == 13);
  CHECK_THROWS_AS(n_epsilon(0.0), DomainError);
}

TEST_CASE("second sufficient condition") {
  // (2w)^(1+ε) = 36 > 20.
  auto r = check_cond2(20, 50, 3, 1.0);
  CHECK_FALSE(r.size_ok);
  CHECK_FALSE(r.holds);
  r = check_cond2(40, 50, 3, 1.0);
  CHECK(r.size_ok);
  CHECK(r.n_epsilon_ok);
  CHECK(r.n_eps == 13);
  CHECK_THROWS_AS(check_cond2(40, 50, 2, 1.0), DomainError);
}
