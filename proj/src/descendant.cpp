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

#include "domap/descendant.hpp"

#include <bit>
#include <unordered_set>

#include "domap/errors.hpp"

namespace domap {

namespace {

// Column `c` of a row-major binary matrix as a word of length rows.size().
Word column(const std::vector<Word>& rows, std::size_t c) {
  Word col(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].test(c)) col.set(r);
  }
  return col;
}

}  // namespace

DescendantArrayPair to_descendant_arrays(const DominationMapping& map) {
  DescendantArrayPair pair;
  const auto m = static_cast<std::size_t>(map.m());
  pair.a.reserve(map.table().size());
  for (std::uint64_t x = 0; x < map.table().size(); ++x) pair.a.push_back(Word::from_index(x, m));
  pair.b = map.table();
  return pair;
}

DominationMapping from_descendant_arrays(const DescendantArrayPair& pair, int w) {
  const std::size_t rows = pair.a.size();
  if (rows == 0 || !std::has_single_bit(rows) || pair.b.size() != rows) {
    throw ConversionError("descendant arrays need 2^m rows in both matrices");
  }
  const auto m = static_cast<std::size_t>(std::countr_zero(rows));
  if (static_cast<int>(m) > kMaxTableDimension) throw ResourceError("descendant arrays too large");
  for (std::size_t r = 0; r < rows; ++r) {
    if (pair.a[r].size() != m || pair.a[r] != Word::from_index(r, m)) {
      throw ConversionError("matrix A is not the lexicographic list of all " + std::to_string(m) +
                            "-bit words");
    }
  }
  const std::size_t n = pair.b.front().size();
  if (n == 0) throw ConversionError("matrix B has no columns");
  std::unordered_set<Word> distinct;
  for (std::size_t r = 0; r < rows; ++r) {
    const Word& y = pair.b[r];
    if (y.size() != n) throw ConversionError("rows of B have different lengths");
    if (static_cast<int>(y.weight()) > w) {
      throw ConversionError("row " + std::to_string(r) + " of B has weight " + std::to_string(y.weight()) +
                            " > w = " + std::to_string(w));
    }
    if (!distinct.insert(y).second) throw ConversionError("row " + std::to_string(r) + " of B repeats");
  }

  std::vector<Word> a_cols;
  for (std::size_t i = 0; i < m; ++i) a_cols.push_back(column(pair.a, i));
  std::vector<int> owners(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    const Word b_col = column(pair.b, j);
    for (std::size_t i = 0; i < m; ++i) {
      if (b_col.is_descendant_of(a_cols[i])) {
        owners[j] = static_cast<int>(i);
        break;
      }
    }
    if (owners[j] < 0) {
      throw ConversionError("column " + std::to_string(j + 1) + " of B is covered by no column of A");
    }
  }
  return DominationMapping(w, DominationGraph::from_owners(static_cast<int>(m), std::move(owners)),
                           pair.b);
}

}  // namespace domap
