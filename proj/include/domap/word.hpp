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

#ifndef DOMAP_WORD_HPP_
#define DOMAP_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace domap {

// Fixed-length binary word. Positions are 0-based here; position 0 is the
// leftmost character when printed and the most significant bit when the
// word is read as an integer.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t length);

  // Parses a string over {0,1}; throws ParseError on any other character.
  static Word from_string(std::string_view bits);
  // The `length`-bit binary representation of `value`.
  static Word from_index(std::uint64_t value, std::size_t length);
  static Word unit(std::size_t length, std::size_t position);

  std::size_t size() const { return length_; }
  bool test(std::size_t pos) const {
    return (limbs_[pos >> 6] >> (pos & 63)) & 1U;
  }
  void set(std::size_t pos, bool value = true);

  std::size_t weight() const;
  bool is_zero() const;
  // Positions holding a one, ascending.
  std::vector<std::size_t> support() const;

  // Integer value with position 0 most significant; requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;

  Word concat(const Word& tail) const;
  // Word restricted to positions [first, first + count).
  Word slice(std::size_t first, std::size_t count) const;

  // True iff every one of *this sits under a one of `other` (this ≺ other).
  bool is_descendant_of(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  std::size_t hash() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> limbs_;
};

}  // namespace domap

template <>
struct std::hash<domap::Word> {
  std::size_t operator()(const domap::Word& w) const noexcept { return w.hash(); }
};

#endif  // DOMAP_WORD_HPP_
