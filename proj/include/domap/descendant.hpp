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

#ifndef DOMAP_DESCENDANT_HPP_
#define DOMAP_DESCENDANT_HPP_

#include <vector>

#include "domap/mapping.hpp"
#include "domap/word.hpp"

namespace domap {

// Matrix form of a mapping: row x of `a` is the m-bit word x (rows in
// lexicographic order) and row x of `b` is its image.
struct DescendantArrayPair {
  std::vector<Word> a;
  std::vector<Word> b;
};

DescendantArrayPair to_descendant_arrays(const DominationMapping& map);

// Rebuilds a mapping from a pair. Each column of `b` is assigned to the
// lowest-index column of `a` that covers it. Throws ConversionError when `a`
// is not the lexicographic matrix, rows of `b` repeat or exceed weight w, or
// some column of `b` is covered by no column of `a`.
DominationMapping from_descendant_arrays(const DescendantArrayPair& pair, int w);

}  // namespace domap

#endif  // DOMAP_DESCENDANT_HPP_
