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

#include "domap/mapping.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "domap/errors.hpp"

namespace domap {

namespace {

std::string domain_string(std::uint64_t x, int m) {
  return Word::from_index(x, static_cast<std::size_t>(m)).to_string();
}

}  // namespace

DominationMapping::DominationMapping(int w, DominationGraph graph, std::vector<Word> table)
    : w_(w), graph_(std::move(graph)), table_(std::move(table)) {
  if (w_ < 0) throw DomainError("radius w must be nonnegative");
  if (graph_.m() > kMaxTableDimension) {
    throw ResourceError("mapping tables are limited to m <= " + std::to_string(kMaxTableDimension));
  }
  const std::size_t rows = std::size_t{1} << graph_.m();
  if (table_.size() != rows) {
    throw DimensionError("mapping table has " + std::to_string(table_.size()) + " rows, expected " +
                         std::to_string(rows));
  }
  for (const auto& y : table_) {
    if (static_cast<int>(y.size()) != graph_.n()) throw DimensionError("image length differs from n");
  }
}

DominationMapping DominationMapping::with_consecutive_blocks() const {
  if (graph_.has_consecutive_blocks()) return *this;
  std::vector<std::size_t> order(static_cast<std::size_t>(n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return graph_.owner(a) < graph_.owner(b); });
  std::vector<int> owners;
  owners.reserve(order.size());
  for (auto j : order) owners.push_back(graph_.owner(j));
  std::vector<Word> table;
  table.reserve(table_.size());
  for (const auto& y : table_) {
    Word z(y.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (y.test(order[k])) z.set(k);
    }
    table.push_back(std::move(z));
  }
  return DominationMapping(w_, DominationGraph::from_owners(m(), std::move(owners)), std::move(table));
}

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::kInjective:
      return "injective";
    case Invariant::kWeight:
      return "weight";
    case Invariant::kDomination:
      return "domination";
    case Invariant::kZeroImage:
      return "zero-image";
  }
  return "unknown";
}

Verdict verify_mapping(const DominationMapping& map) {
  Verdict v;
  const int m = map.m();
  const auto& table = map.table();

  std::unordered_map<Word, std::uint64_t> seen;
  seen.reserve(table.size());
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    auto [it, inserted] = seen.emplace(table[x], x);
    if (!inserted) {
      v.accepted = false;
      v.violated = Invariant::kInjective;
      v.x = it->second;
      v.other = x;
      v.detail = "x=" + domain_string(it->second, m) + " and x=" + domain_string(x, m) +
                 " share image " + table[x].to_string();
      return v;
    }
  }

  for (std::uint64_t x = 0; x < table.size(); ++x) {
    if (static_cast<int>(table[x].weight()) > map.w()) {
      v.accepted = false;
      v.violated = Invariant::kWeight;
      v.x = x;
      v.detail = "x=" + domain_string(x, m) + " has image " + table[x].to_string() + " of weight " +
                 std::to_string(table[x].weight());
      return v;
    }
  }

  const auto& g = map.graph();
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    for (auto j : table[x].support()) {
      const int i = g.owner(j);
      if (!domain_bit(x, m, i)) {
        v.accepted = false;
        v.violated = Invariant::kDomination;
        v.x = x;
        v.vertex = i;
        v.detail = "x=" + domain_string(x, m) + " i=" + std::to_string(i + 1) + " but image " +
                   table[x].to_string() + " is nonzero at position " + std::to_string(j + 1);
        return v;
      }
    }
  }

  if (!table[0].is_zero()) {
    v.accepted = false;
    v.violated = Invariant::kZeroImage;
    v.detail = "image of the zero word is " + table[0].to_string();
  }
  return v;
}

}  // namespace domap
