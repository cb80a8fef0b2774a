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

#include "domap/word.hpp"

#include <bit>

#include "domap/errors.hpp"

namespace domap {

Word::Word(std::size_t length) : length_(length), limbs_((length + 63) / 64, 0) {}

Word Word::from_string(std::string_view bits) {
  Word w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bitstring contains a character other than 0/1: '" +
                       std::string(bits) + "'");
    }
  }
  return w;
}

Word Word::from_index(std::uint64_t value, std::size_t length) {
  if (length > 64) throw DimensionError("from_index: length exceeds 64 bits");
  if (length < 64 && (value >> length) != 0) {
    throw DomainError("from_index: value does not fit in the requested length");
  }
  Word w(length);
  for (std::size_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1U) w.set(i);
  }
  return w;
}

Word Word::unit(std::size_t length, std::size_t position) {
  if (position >= length) throw DimensionError("unit: position out of range");
  Word w(length);
  w.set(position);
  return w;
}

void Word::set(std::size_t pos, bool value) {
  if (pos >= length_) throw DimensionError("Word::set: position out of range");
  const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
  if (value) {
    limbs_[pos >> 6] |= mask;
  } else {
    limbs_[pos >> 6] &= ~mask;
  }
}

std::size_t Word::weight() const {
  std::size_t total = 0;
  for (auto limb : limbs_) total += static_cast<std::size_t>(std::popcount(limb));
  return total;
}

bool Word::is_zero() const {
  for (auto limb : limbs_) {
    if (limb != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Word::support() const {
  std::vector<std::size_t> out;
  for (std::size_t li = 0; li < limbs_.size(); ++li) {
    std::uint64_t limb = limbs_[li];
    while (limb != 0) {
      out.push_back(li * 64 + static_cast<std::size_t>(std::countr_zero(limb)));
      limb &= limb - 1;
    }
  }
  return out;
}

std::uint64_t Word::to_index() const {
  if (length_ > 64) throw DimensionError("to_index: word longer than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < length_; ++i) v = (v << 1) | (test(i) ? 1U : 0U);
  return v;
}

std::string Word::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

Word Word::concat(const Word& tail) const {
  Word out(length_ + tail.length_);
  for (auto p : support()) out.set(p);
  for (auto p : tail.support()) out.set(length_ + p);
  return out;
}

Word Word::slice(std::size_t first, std::size_t count) const {
  if (first + count > length_) throw DimensionError("slice out of range");
  Word out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (test(first + i)) out.set(i);
  }
  return out;
}

bool Word::is_descendant_of(const Word& other) const {
  if (other.length_ != length_) throw DimensionError("descendant test on words of different length");
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if ((limbs_[i] & ~other.limbs_[i]) != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  // Lexicographic on positions, i.e. numeric order with position 0 most
  // significant.
  for (std::size_t i = 0; i < a.length_; ++i) {
    const bool x = a.test(i);
    const bool y = b.test(i);
    if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t Word::hash() const {
  std::size_t h = std::hash<std::size_t>{}(length_);
  for (auto limb : limbs_) {
    h ^= std::hash<std::uint64_t>{}(limb) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace domap
