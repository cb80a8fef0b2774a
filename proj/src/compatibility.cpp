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

#include "domap/compatibility.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "domap/errors.hpp"
#include "domap/mapping.hpp"

namespace domap {

namespace {

void check_dimensions(const DominationGraph& g, int w) {
  if (w < 0) throw DomainError("w must be nonnegative");
  if (g.m() > kMaxTableDimension) {
    throw ResourceError("compatibility graphs are limited to m <= " + std::to_string(kMaxTableDimension));
  }
}

std::vector<std::uint64_t> subball_sizes(int n, int w) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) out[static_cast<std::size_t>(p)] = ball_size({p, w}).get_ui();
  return out;
}

}  // namespace

std::uint64_t count_compatibility_edges(const DominationGraph& g, int w) {
  check_dimensions(g, w);
  if (ball_size({g.n(), w}) > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw ResourceError("B(n, w) has too many words to index");
  }
  const auto sizes = subball_sizes(g.n(), w);
  const auto deg = g.degrees();
  const int m = g.m();
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    int p = 0;
    for (int i = 0; i < m; ++i) {
      if (domain_bit(x, m, i)) p += deg[static_cast<std::size_t>(i)];
    }
    total += sizes[static_cast<std::size_t>(p)];
  }
  return total;
}

CompatibilityGraph::CompatibilityGraph(const DominationGraph& g, int w, std::uint64_t max_edges)
    : graph_(g), ball_({g.n(), w}) {
  const std::uint64_t edges = count_compatibility_edges(g, w);
  if (edges > max_edges) {
    throw ResourceError("compatibility graph has " + std::to_string(edges) + " edges, budget is " +
                        std::to_string(max_edges));
  }
  const int m = g.m();
  const int n = g.n();
  const std::uint64_t left = std::uint64_t{1} << m;
  csr_.right_size = static_cast<std::uint32_t>(ball_.size());
  csr_.offsets.reserve(left + 1);
  csr_.targets.reserve(edges);

  std::vector<std::uint32_t> exps;  // ascending exponents n - 1 - pos of P(x)
  std::vector<std::uint32_t> comb;  // local indices into exps, strictly increasing
  std::vector<std::uint32_t> chosen(static_cast<std::size_t>(w) + 1);
  for (std::uint64_t x = 0; x < left; ++x) {
    exps.clear();
    for (int i = 0; i < m; ++i) {
      if (!domain_bit(x, m, i)) continue;
      for (const auto pos : g.block(i)) exps.push_back(static_cast<std::uint32_t>(n - 1) - static_cast<std::uint32_t>(pos));
    }
    std::sort(exps.begin(), exps.end());
    const auto p = static_cast<std::uint32_t>(exps.size());
    const auto kmax = std::min<std::uint32_t>(p, static_cast<std::uint32_t>(w));
    for (std::uint32_t k = 0; k <= kmax; ++k) {
      // k-subsets of [p] in colex order; the map local → global exponent is
      // increasing, so global ranks come out increasing as well.
      comb.resize(k);
      for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
      while (true) {
        for (std::uint32_t i = 0; i < k; ++i) chosen[i] = exps[comb[i]];
        const std::uint64_t r = ball_.rank_of_exponents(std::span<const std::uint32_t>(chosen.data(), k));
        csr_.targets.push_back(static_cast<std::uint32_t>(r));
        std::uint32_t i = 0;
        while (i < k && comb[i] + 1 == (i + 1 < k ? comb[i + 1] : p)) ++i;
        if (i == k) break;
        ++comb[i];
        for (std::uint32_t j = 0; j < i; ++j) comb[j] = j;
      }
    }
    csr_.offsets.push_back(csr_.targets.size());
  }
}

std::uint64_t CompatibilityGraph::neighborhood_size(std::span<const std::uint64_t> xs) const {
  std::vector<char> hit(csr_.right_size, 0);
  std::uint64_t count = 0;
  for (const auto x : xs) {
    if (x >= left_size()) throw DomainError("domain word index out of range");
    for (const auto v : neighbors(x)) {
      if (!hit[v]) {
        hit[v] = 1;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace domap
