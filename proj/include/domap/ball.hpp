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

#ifndef DOMAP_BALL_HPP_
#define DOMAP_BALL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "domap/bigint.hpp"
#include "domap/word.hpp"

namespace domap {

// The Hamming ball B(n, w): words of length n with at most w ones.
struct BallParams {
  int n = 0;
  int w = 0;
};

// |B(n, w)|. A radius larger than n is clamped to n (the whole cube).
BigInt ball_size(BallParams p);

// Canonical enumeration of B(n, w): increasing weight, then increasing
// integer value (position 0 most significant) within a weight class.
// All ranks are 64-bit; construction fails if |B(n, w)| does not fit.
class BallIndexer {
 public:
  explicit BallIndexer(BallParams p);

  int n() const { return n_; }
  int w() const { return w_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(const Word& y) const;
  Word unrank(std::uint64_t k) const;

  // Rank of the word whose ones are at `positions` (ascending, distinct).
  std::uint64_t rank_of_positions(std::span<const std::size_t> positions) const;

  // Rank from exponents (n - 1 - position) sorted ascending. This is the
  // hot path for compatibility-graph construction.
  std::uint64_t rank_of_exponents(std::span<const std::uint32_t> exps) const {
    std::uint64_t r = offset_[exps.size()];
    for (std::size_t i = 0; i < exps.size(); ++i) r += choose(exps[i], i + 1);
    return r;
  }

  std::uint64_t choose(std::uint64_t a, std::uint64_t b) const {
    return b > a ? 0 : binom_[a * (static_cast<std::size_t>(w_) + 1) + b];
  }

 private:
  int n_;
  int w_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> offset_;  // offset_[k] = #words of weight < k
  std::vector<std::uint64_t> binom_;   // C(a, b) for a <= n, b <= w
};

std::uint64_t rank(const Word& y, BallParams p);
Word unrank(std::uint64_t k, BallParams p);

}  // namespace domap

#endif  // DOMAP_BALL_HPP_
