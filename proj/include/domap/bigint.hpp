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

#ifndef DOMAP_BIGINT_HPP_
#define DOMAP_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace domap {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// floor(log2 v) for v >= 1.
inline std::int64_t floor_log2(const BigInt& v) {
  return static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v);

}  // namespace domap

#endif  // DOMAP_BIGINT_HPP_
