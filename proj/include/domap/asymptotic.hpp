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

#ifndef DOMAP_ASYMPTOTIC_HPP_
#define DOMAP_ASYMPTOTIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "domap/bigint.hpp"
#include "domap/compatibility.hpp"
#include "domap/graph.hpp"
#include "domap/word.hpp"

namespace domap {

// Ψ(v): range words dominated by v and by no proper descendant of v, i.e.
// words whose nonzero blocks are exactly the blocks of supp(v). Computed from
// the block sizes by truncated polynomial products.
BigInt psi(const Word& v, const DominationGraph& g, int w);

// Same count by scanning B(n, w) and testing every proper descendant.
// Throws ResourceError when |B(n, w)| exceeds `max_ball`.
std::uint64_t psi_brute(const Word& v, const DominationGraph& g, int w, std::uint64_t max_ball = 5'000'000);

// δ^j (δ+1)^(w-j): Ψ of a weight-w word covering j blocks of size δ and
// w - j of size δ + 1.
BigInt psi_top_weight(int j, int delta, int w);

BigInt psi_sum(std::span<const std::uint64_t> words, const DominationGraph& g, int w);

// Ξ_U(V) = |N(U ∪ V)| - |N(U)|, by direct neighbourhood counting.
std::uint64_t xi(const CompatibilityGraph& h, std::span<const std::uint64_t> u, std::span<const std::uint64_t> v);

// Domain words are integers in [0, 2^m), vertex 0 the most significant bit.
bool is_d_closed(std::span<const std::uint64_t> x, int m);
// ab ∈ X with |a| = i implies a'b ∈ X for every a' of length i.
bool is_i_balanced(std::span<const std::uint64_t> x, int m, int i);

// Repeatedly swaps u ∈ X for u - e_i ∉ X (smallest u, then first i) until X
// is d-closed. Cardinality is kept and |N(X)| never grows.
std::vector<std::uint64_t> closure(std::span<const std::uint64_t> x, int m);

// Smallest bad set that is d-closed and i-balanced, by enumerating down-sets
// of {0,1}^m (m <= 5). nullopt when none exists.
std::optional<std::vector<std::uint64_t>> minimum_bad_set(const CompatibilityGraph& h, int balanced);

// Words v ∈ X with no proper ancestor in X.
std::vector<std::uint64_t> maximal_support_words(std::span<const std::uint64_t> x, int m);

// δ^w >= 2^(2w-1) Σ_{j<w} C(m - w, j); needs m >= w >= 1.
bool check_cond1(int m, const BigInt& delta, int w);
BigInt cond1_rhs(int m, int w);
// Least δ >= 1 with check_cond1.
BigInt cond1_min_delta(int m, int w);

enum class LogBase { kNatural, kBinary };

// Least N such that m^(ε/(1+ε)) >= 1 + log m for every m >= N.
BigInt n_epsilon(double epsilon, LogBase base = LogBase::kNatural);

struct Cond2Report {
  bool holds = false;
  bool size_ok = false;       // m >= (2w)^(1+ε)
  bool n_epsilon_ok = false;  // m >= N_ε
  bool necessary_ok = false;  // 2^m <= Σ_{j<=w} C(δm, j)
  BigInt n_eps;
  bool cond1 = false;         // evaluated independently
};

Cond2Report check_cond2(int m, int delta, int w, double epsilon, LogBase base = LogBase::kNatural);

}  // namespace domap

#endif  // DOMAP_ASYMPTOTIC_HPP_
