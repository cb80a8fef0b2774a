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

#ifndef DOMAP_LP_HPP_
#define DOMAP_LP_HPP_

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "domap/bigint.hpp"

namespace domap {

// Equitable graph data: m1 vertices of degree δ + 1 followed by m2 of degree δ.
struct EquitableSplit {
  int m = 0;
  int n = 0;
  int w = 0;
  int delta = 0;
  int m1 = 0;
  int m2 = 0;
  int n1 = 0;
  int n2 = 0;
};

EquitableSplit equitable_split(int m, int n, int w);

// Edge class (σ1, σ2, ρ1, ρ2): the domain word has σ1 ones on the first class
// of vertices and σ2 on the second; the range word is nonzero on ρ1 blocks of
// the first class and ρ2 of the second.
struct OrbitIndex {
  int s1 = 0;
  int s2 = 0;
  int r1 = 0;
  int r2 = 0;
  friend auto operator<=>(const OrbitIndex&, const OrbitIndex&) = default;
};

std::string to_string(const OrbitIndex& k);

// Ω in lexicographic order of (σ1, σ2, ρ1, ρ2).
std::vector<OrbitIndex> orbit_indices(const EquitableSplit& s);

// Number of words on ρ1 blocks of size δ + 1 and ρ2 blocks of size δ, every
// block nonzero, total weight <= w.
BigInt coefficient_C(int r1, int r2, int delta, int w);

BigInt orbit_size(const OrbitIndex& k, const EquitableSplit& s);

struct ReducedLP {
  EquitableSplit split;
  std::vector<OrbitIndex> omega;
  std::vector<std::pair<int, int>> s_rows;  // (σ1, σ2), lexicographic
  std::vector<std::pair<int, int>> r_rows;  // (ρ1, ρ2), lexicographic, ρ1 + ρ2 <= w
  std::vector<std::vector<BigInt>> astar;   // s_rows then r_rows, one column per orbit
  std::vector<BigInt> objective;            // orbit sizes
};

ReducedLP build_reduced_lp(int m, int n, int w);

// `rows cols` then one line per row, entries separated by single spaces.
void dump_astar(std::ostream& out, const ReducedLP& lp);
std::string astar_string(const ReducedLP& lp);

struct LpSolution {
  Rational optimum;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// Exact optimum of  max Σ size_k X_k  s.t.  A* X <= 1, X >= 0. The upper
// bounds X_k <= 1 are implied by the S-side rows and left out.
LpSolution solve_reduced_lp(const ReducedLP& lp);

struct LpDecision {
  bool exists_equitable = false;
  Rational optimum;
  BigInt target;  // 2^m
};

LpDecision decide_lp(int m, int n, int w);

}  // namespace domap

#endif  // DOMAP_LP_HPP_
