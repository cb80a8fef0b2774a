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

#ifndef DOMAP_MAPPING_HPP_
#define DOMAP_MAPPING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domap/graph.hpp"
#include "domap/word.hpp"

namespace domap {

// Largest domain dimension for which mapping tables are materialized.
inline constexpr int kMaxTableDimension = 26;

// An explicit table realizing φ: {0,1}^m → B(n, w) together with the graph
// it is claimed to dominate under. table[x] is the image of the m-bit word
// whose integer value is x.
//
// The constructor checks structure only (row count and word lengths); use
// verify_mapping() for the domination-mapping invariants.
class DominationMapping {
 public:
  DominationMapping(int w, DominationGraph graph, std::vector<Word> table);

  int m() const { return graph_.m(); }
  int n() const { return graph_.n(); }
  int w() const { return w_; }
  const DominationGraph& graph() const { return graph_; }
  const std::vector<Word>& table() const { return table_; }
  const Word& image(std::uint64_t x) const { return table_[x]; }

  // Same mapping with the right positions relabeled so that the blocks are
  // consecutive in vertex order. Positions keep their relative order inside
  // a block. Returns *this unchanged when already consecutive.
  DominationMapping with_consecutive_blocks() const;

 private:
  int w_;
  DominationGraph graph_;
  std::vector<Word> table_;
};

enum class Invariant {
  kInjective,   // two domain words share an image
  kWeight,      // an image is heavier than w
  kDomination,  // x_i = 0 but the image is nonzero on J_i
  kZeroImage,   // φ(0) is not the all-zero word
};

std::string to_string(Invariant inv);

struct Verdict {
  bool accepted = true;
  std::optional<Invariant> violated;
  // Witness of the first violation: the offending domain word(s) and, for
  // domination failures, the left vertex (0-based).
  std::uint64_t x = 0;
  std::uint64_t other = 0;
  int vertex = -1;
  std::string detail;

  explicit operator bool() const { return accepted; }
};

// Checks, in order: injectivity, weight, domination, φ(0) = 0. Reports the
// first violation found.
Verdict verify_mapping(const DominationMapping& map);

}  // namespace domap

#endif  // DOMAP_MAPPING_HPP_
