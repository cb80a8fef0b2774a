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

#include "domap/graph.hpp"

#include <algorithm>
#include <sstream>

#include "domap/errors.hpp"

namespace domap {

DominationGraph::DominationGraph(int m, std::vector<int> owners) : m_(m), owners_(std::move(owners)) {
  if (m_ < 1) throw DomainError("domination graph needs at least one left vertex");
  if (owners_.empty()) throw DomainError("domination graph needs at least one right vertex");
  blocks_.assign(static_cast<std::size_t>(m_), {});
  for (std::size_t j = 0; j < owners_.size(); ++j) {
    const int i = owners_[j];
    if (i < 0 || i >= m_) throw DomainError("right position " + std::to_string(j + 1) + " has no valid owner");
    blocks_[i].push_back(j);
  }
  for (int i = 0; i < m_; ++i) {
    if (blocks_[i].empty()) {
      throw DomainError("left vertex " + std::to_string(i + 1) + " has degree zero");
    }
  }
}

DominationGraph DominationGraph::from_degrees(std::span<const int> degrees) {
  std::vector<int> owners;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw DomainError("degrees must be positive");
    owners.insert(owners.end(), static_cast<std::size_t>(degrees[i]), static_cast<int>(i));
  }
  return DominationGraph(static_cast<int>(degrees.size()), std::move(owners));
}

DominationGraph DominationGraph::from_owners(int m, std::vector<int> owners) {
  return DominationGraph(m, std::move(owners));
}

DominationGraph DominationGraph::from_edges(int m, int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw DomainError("domination graph needs at least one right vertex");
  std::vector<int> owners(static_cast<std::size_t>(n), -1);
  for (auto [left, right] : edges) {
    if (left < 0 || left >= m || right < 0 || right >= n) throw DomainError("edge endpoint out of range");
    int& o = owners[static_cast<std::size_t>(right)];
    if (o < 0 || left < o) o = left;
  }
  for (std::size_t j = 0; j < owners.size(); ++j) {
    if (owners[j] < 0) throw DomainError("right vertex " + std::to_string(j + 1) + " is isolated");
  }
  return DominationGraph(m, std::move(owners));
}

DominationGraph DominationGraph::equitable(int m, int n) {
  if (m < 1 || n < m) throw DomainError("equitable graph needs 1 <= m <= n");
  const int delta = n / m;
  const int heavy = n % m;
  std::vector<int> degrees(static_cast<std::size_t>(m), delta);
  std::fill(degrees.begin(), degrees.begin() + heavy, delta + 1);
  return from_degrees(degrees);
}

std::vector<int> DominationGraph::degrees() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(static_cast<int>(b.size()));
  return out;
}

std::vector<int> DominationGraph::degree_sequence() const {
  auto d = degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> DominationGraph::degree_distribution() const {
  const auto seq = degree_sequence();
  std::vector<int> dist(static_cast<std::size_t>(seq.back()) + 1, 0);
  for (int d : seq) ++dist[static_cast<std::size_t>(d)];
  return dist;
}

bool DominationGraph::is_equitable() const {
  const auto seq = degree_sequence();
  const int lo = n() / m_;
  const int hi = (n() + m_ - 1) / m_;
  return seq.front() == lo && seq.back() == hi;
}

bool DominationGraph::has_consecutive_blocks() const {
  return std::is_sorted(owners_.begin(), owners_.end());
}

std::string DominationGraph::describe() const {
  std::ostringstream os;
  os << "degrees";
  for (int d : degrees()) os << ' ' << d;
  if (!has_consecutive_blocks()) {
    os << " owners";
    for (int o : owners_) os << ' ' << (o + 1);
  }
  return os.str();
}

bool dominates(const Word& x, const Word& y, const DominationGraph& g) {
  if (static_cast<int>(x.size()) != g.m() || static_cast<int>(y.size()) != g.n()) {
    throw DimensionError("dominates: word lengths do not match the graph");
  }
  for (auto j : y.support()) {
    if (!x.test(static_cast<std::size_t>(g.owner(j)))) return false;
  }
  return true;
}

}  // namespace domap
