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

#include "domap/simplex.hpp"

#include <optional>

#include "domap/errors.hpp"

namespace domap {

std::string to_string(const Rational& v) { return v.get_str(); }

SimplexResult solve_packing_lp(const PackingLp& lp) {
  const std::size_t rows = lp.a.size();
  const std::size_t cols = lp.c.size();
  if (lp.b.size() != rows) throw DimensionError("simplex: |b| differs from the row count");
  for (const auto& r : lp.a) {
    if (r.size() != cols) throw DimensionError("simplex: ragged constraint matrix");
  }
  for (const auto& v : lp.b) {
    if (sgn(v) < 0) throw DomainError("simplex: right-hand side must be nonnegative");
  }

  // Tableau columns: structural 0..cols-1, slacks cols..cols+rows-1, rhs last.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = lp.a[i][j];
    t[i][cols + i] = 1;
    t[i][rhs] = lp.b[i];
    basis[i] = cols + i;
  }
  auto& obj = t[rows];  // reduced costs -c, objective value in rhs
  for (std::size_t j = 0; j < cols; ++j) obj[j] = -lp.c[j];

  SimplexResult res;
  bool bland = false;
  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (sgn(obj[j]) >= 0) continue;
      if (!enter || (!bland && obj[j] < obj[*enter])) enter = j;
      if (bland) break;
    }
    if (!enter) break;
    const std::size_t e = *enter;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][e]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][e];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (!leave) throw DomainError("simplex: objective is unbounded");
    if (sgn(best) == 0) bland = true;

    const std::size_t l = *leave;
    const Rational piv = t[l][e];
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(t[l][j]) != 0) t[l][j] /= piv;
    }
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == l || sgn(t[i][e]) == 0) continue;
      const Rational f = t[i][e];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t[l][j]) != 0) t[i][j] -= f * t[l][j];
      }
    }
    basis[l] = e;
    ++res.pivots;
  }

  res.optimum = obj[rhs];
  res.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) res.x[basis[i]] = t[i][rhs];
  }
  return res;
}

}  // namespace domap
