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

#include "domap/ball.hpp"

#include <algorithm>
#include <limits>

#include "domap/errors.hpp"

namespace domap {

namespace {

BallParams normalized(BallParams p) {
  if (p.n < 0 || p.w < 0) throw DomainError("ball parameters must be nonnegative");
  if (p.w > p.n) p.w = p.n;
  return p;
}

}  // namespace

BigInt ball_size(BallParams p) {
  p = normalized(p);
  BigInt total = 0;
  for (int j = 0; j <= p.w; ++j) total += binomial(p.n, j);
  return total;
}

BallIndexer::BallIndexer(BallParams p) {
  p = normalized(p);
  n_ = p.n;
  w_ = p.w;
  const BigInt exact = ball_size(p);
  if (exact > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw ResourceError("ball B(" + std::to_string(n_) + "," + std::to_string(w_) +
                        ") is too large to index with 64-bit ranks");
  }
  size_ = exact.get_ui();

  const std::size_t cols = static_cast<std::size_t>(w_) + 1;
  binom_.assign((static_cast<std::size_t>(n_) + 1) * cols, 0);
  for (int a = 0; a <= n_; ++a) {
    binom_[a * cols] = 1;
    for (int b = 1; b <= std::min(a, w_); ++b) {
      const std::uint64_t left = binom_[(a - 1) * cols + (b - 1)];
      const std::uint64_t up = (b <= a - 1) ? binom_[(a - 1) * cols + b] : 0;
      binom_[a * cols + b] = left + up;
    }
  }
  offset_.assign(cols + 1, 0);
  for (int k = 0; k <= w_; ++k) offset_[k + 1] = offset_[k] + choose(n_, k);
}

std::uint64_t BallIndexer::rank(const Word& y) const {
  if (static_cast<int>(y.size()) != n_) throw DimensionError("rank: word length differs from n");
  const auto supp = y.support();
  if (static_cast<int>(supp.size()) > w_) throw DomainError("rank: word weight exceeds w");
  return rank_of_positions(supp);
}

std::uint64_t BallIndexer::rank_of_positions(std::span<const std::size_t> positions) const {
  if (static_cast<int>(positions.size()) > w_) throw DomainError("rank: word weight exceeds w");
  std::uint64_t r = offset_[positions.size()];
  // Ascending positions give descending exponents.
  const std::size_t k = positions.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t pos = positions[k - 1 - i];
    if (static_cast<int>(pos) >= n_) throw DimensionError("rank: position out of range");
    r += choose(static_cast<std::uint64_t>(n_ - 1) - pos, i + 1);
  }
  return r;
}

Word BallIndexer::unrank(std::uint64_t k) const {
  if (k >= size_) throw DomainError("unrank: rank out of range");
  std::size_t weight = 0;
  while (offset_[weight + 1] <= k) ++weight;
  std::uint64_t r = k - offset_[weight];
  Word y(static_cast<std::size_t>(n_));
  // Combinatorial number system, largest exponent first.
  std::uint64_t bound = static_cast<std::uint64_t>(n_);
  for (std::size_t i = weight; i >= 1; --i) {
    std::uint64_t e = i - 1;
    while (e + 1 < bound && choose(e + 1, i) <= r) ++e;
    r -= choose(e, i);
    y.set(static_cast<std::size_t>(n_ - 1) - e);
    bound = e;
  }
  return y;
}

std::uint64_t rank(const Word& y, BallParams p) { return BallIndexer(p).rank(y); }

Word unrank(std::uint64_t k, BallParams p) { return BallIndexer(p).unrank(k); }

}  // namespace domap
