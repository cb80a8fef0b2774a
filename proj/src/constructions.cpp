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

#include "domap/constructions.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "domap/errors.hpp"
#include "domap/hopcroft_karp.hpp"

namespace domap {

namespace {

void require_m(int m) {
  if (m < 1) throw DomainError("m must be positive");
  if (m > kMaxTableDimension) throw ResourceError("m exceeds the table limit " + std::to_string(kMaxTableDimension));
}

}  // namespace

DominationMapping small_3_4_2(int variant) {
  static const char* const kImages[] = {"0000", "0001", "0010", "0011", "0100", "0101", "1000", "1001"};
  std::vector<Word> table;
  for (const char* s : kImages) table.push_back(Word::from_string(s));
  switch (variant) {
    case 1: {
      const std::pair<int, int> edges[] = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 3}};
      return DominationMapping(2, DominationGraph::from_edges(3, 4, edges), std::move(table));
    }
    case 2:
      return DominationMapping(2, DominationGraph::from_owners(3, {1, 0, 1, 2}), std::move(table));
    case 3:
      return DominationMapping(2, DominationGraph::from_owners(3, {0, 0, 1, 2}), std::move(table));
    default:
      throw DomainError("small_3_4_2 variant must be 1, 2 or 3");
  }
}

DominationMapping identity_mapping(int m) { return identity_mapping(m, m); }

DominationMapping identity_mapping(int m, int w) {
  require_m(m);
  if (w < m) throw DomainError("identity mapping needs w >= m");
  std::vector<int> owners(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) owners[static_cast<std::size_t>(i)] = i;
  std::vector<Word> table;
  const std::uint64_t rows = std::uint64_t{1} << m;
  table.reserve(rows);
  for (std::uint64_t x = 0; x < rows; ++x) table.push_back(Word::from_index(x, static_cast<std::size_t>(m)));
  return DominationMapping(w, DominationGraph::from_owners(m, std::move(owners)), std::move(table));
}

DominationMapping extend_n(const DominationMapping& map) {
  auto owners = map.graph().owners();
  owners.push_back(map.m() - 1);
  std::vector<Word> table;
  table.reserve(map.table().size());
  const Word zero(1);
  for (const auto& y : map.table()) table.push_back(y.concat(zero));
  return DominationMapping(map.w(), DominationGraph::from_owners(map.m(), std::move(owners)), std::move(table));
}

DominationMapping relax_w(const DominationMapping& map) {
  return DominationMapping(map.w() + 1, map.graph(), map.table());
}

DominationMapping shorten(const DominationMapping& map, int vertex) {
  const int m = map.m();
  if (m < 2) throw DomainError("cannot shorten a mapping with m = 1");
  if (vertex < 0 || vertex >= m) throw DomainError("shorten: vertex out of range");
  const auto& g = map.graph();
  std::vector<std::size_t> keep;
  std::vector<int> owners;
  for (std::size_t j = 0; j < static_cast<std::size_t>(g.n()); ++j) {
    const int o = g.owner(j);
    if (o == vertex) continue;
    keep.push_back(j);
    owners.push_back(o > vertex ? o - 1 : o);
  }
  if (keep.empty()) throw DomainError("shorten would leave no right vertices");
  const int low_bits = m - 1 - vertex;  // domain bits below the removed one
  const std::uint64_t rows = std::uint64_t{1} << (m - 1);
  std::vector<Word> table;
  table.reserve(rows);
  for (std::uint64_t x = 0; x < rows; ++x) {
    const std::uint64_t high = x >> low_bits;
    const std::uint64_t low = x & ((std::uint64_t{1} << low_bits) - 1);
    const Word& y = map.image((high << (low_bits + 1)) | low);
    Word z(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (y.test(keep[k])) z.set(k);
    }
    table.push_back(std::move(z));
  }
  return DominationMapping(map.w(), DominationGraph::from_owners(m - 1, std::move(owners)), std::move(table));
}

DominationMapping product(const DominationMapping& map1, const DominationMapping& map2) {
  const int m1 = map1.m();
  const int m2 = map2.m();
  require_m(m1 + m2);
  auto owners = map1.graph().owners();
  for (const int o : map2.graph().owners()) owners.push_back(o + m1);
  std::vector<Word> table;
  table.reserve(std::size_t{1} << (m1 + m2));
  for (std::uint64_t x1 = 0; x1 < map1.table().size(); ++x1) {
    for (std::uint64_t x2 = 0; x2 < map2.table().size(); ++x2) {
      table.push_back(map1.image(x1).concat(map2.image(x2)));
    }
  }
  return DominationMapping(map1.w() + map2.w(), DominationGraph::from_owners(m1 + m2, std::move(owners)),
                           std::move(table));
}

DominationMapping w1_perfect(int m) {
  require_m(m);
  const std::uint64_t rows = std::uint64_t{1} << m;
  const std::size_t n = rows - 1;
  std::vector<int> owners(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t b = j + 1;
    const int msb = 63 - __builtin_clzll(b);
    owners[j] = m - 1 - msb;
  }
  std::vector<Word> table;
  table.reserve(rows);
  table.emplace_back(n);
  for (std::uint64_t x = 1; x < rows; ++x) table.push_back(Word::unit(n, x - 1));
  return DominationMapping(1, DominationGraph::from_owners(m, std::move(owners)), std::move(table));
}

namespace {

// One recursion step: level ℓ - 1 → level ℓ (ℓ >= 2). Domain words are
// (a, b, x2) with a, b the two new leading coordinates. Right positions are
// [B1^0 | B1^1 | B2]: a owns B1^0, b owns B1^1, B2 keeps the previous graph.
DominationMapping w2_step(const DominationMapping& prev, int level) {
  const std::size_t half = std::size_t{1} << (level - 1);    // |B1^0| = |B1^1|
  const std::size_t quarter = std::size_t{1} << (level - 2);  // unit rows reserved per half
  const std::size_t b1 = 2 * half;
  const std::size_t old_n = static_cast<std::size_t>(prev.n());
  const std::size_t n = b1 + old_n;
  const int old_m = prev.m();
  const int m = old_m + 2;
  const std::uint64_t old_rows = std::uint64_t{1} << old_m;
  const auto& pg = prev.graph();

  std::vector<int> owners(n);
  for (std::size_t j = 0; j < half; ++j) owners[j] = 0;
  for (std::size_t j = half; j < b1; ++j) owners[j] = 1;
  for (std::size_t j = 0; j < old_n; ++j) owners[b1 + j] = pg.owner(j) + 2;

  std::vector<Word> table(std::uint64_t{1} << m, Word(n));
  auto row = [&](int a, int b, std::uint64_t x2) -> Word& {
    return table[(static_cast<std::uint64_t>(a) << (old_m + 1)) | (static_cast<std::uint64_t>(b) << old_m) | x2];
  };

  // a = b = 0: previous mapping on B2.
  for (std::uint64_t x2 = 0; x2 < old_rows; ++x2) {
    const Word& y = prev.image(x2);
    Word& z = row(0, 0, x2);
    for (std::size_t j = 0; j < old_n; ++j) {
      if (y.test(j)) z.set(b1 + j);
    }
  }

  // a = b = 1: B2 = 0; B1 takes every weight-2 word, then the unit words in
  // the last `quarter` columns of each half, in lexicographic order.
  {
    std::vector<Word> rows;
    for (std::size_t p = 0; p < b1; ++p) {
      for (std::size_t q = p + 1; q < b1; ++q) {
        Word z(n);
        z.set(p);
        z.set(q);
        rows.push_back(std::move(z));
      }
    }
    for (std::size_t p = 0; p < b1; ++p) {
      if (p % half >= half - quarter) rows.push_back(Word::unit(n, p));
    }
    std::sort(rows.begin(), rows.end());
    if (rows.size() != old_rows) throw ConstructionError("w2 step: B1 census does not match 2^(2l-1)");
    for (std::uint64_t x2 = 0; x2 < old_rows; ++x2) row(1, 1, x2) = std::move(rows[x2]);
  }

  // a = 0, b = 1 (and symmetrically a = 1, b = 0): a unit in the own half of
  // B1 plus a B2 part of weight <= 1 that x2 dominates. Slots are
  // (k, unit j) for every k and (k, zero) for k < quarter; the x2 → slot
  // assignment is a perfect matching.
  const std::size_t unit_slots = half * old_n;
  Csr h;
  h.right_size = static_cast<std::uint32_t>(unit_slots + quarter);
  h.offsets.reserve(old_rows + 1);
  for (std::uint64_t x2 = 0; x2 < old_rows; ++x2) {
    for (std::size_t k = 0; k < half; ++k) {
      if (k < quarter) h.targets.push_back(static_cast<std::uint32_t>(unit_slots + k));
      for (std::size_t j = 0; j < old_n; ++j) {
        if (domain_bit(x2, old_m, pg.owner(j))) h.targets.push_back(static_cast<std::uint32_t>(k * old_n + j));
      }
    }
    h.offsets.push_back(h.targets.size());
  }
  const Matching mt = hopcroft_karp(h);
  if (mt.size != old_rows) throw ConstructionError("w2 step: no one-per-row B2 selector for the mixed quadrants");
  for (std::uint64_t x2 = 0; x2 < old_rows; ++x2) {
    const std::uint32_t s = mt.mate_left[x2];
    const std::size_t k = s >= unit_slots ? s - unit_slots : s / old_n;
    Word& z01 = row(0, 1, x2);
    Word& z10 = row(1, 0, x2);
    z01.set(half + k);
    z10.set(k);
    if (s < unit_slots) {
      z01.set(b1 + s % old_n);
      z10.set(b1 + s % old_n);
    }
  }
  return DominationMapping(2, DominationGraph::from_owners(m, std::move(owners)), std::move(table));
}

}  // namespace

DominationMapping w2_recursive(int level) {
  if (level < 1) throw DomainError("w2_recursive needs level >= 1");
  require_m(2 * level + 1);
  DominationMapping map = small_3_4_2(3);
  for (int l = 2; l <= level; ++l) map = w2_step(map, l);
  return map;
}

}  // namespace domap
