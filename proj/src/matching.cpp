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

#include "domap/matching.hpp"

#include <algorithm>
#include <string>

#include "domap/ball.hpp"
#include "domap/errors.hpp"

namespace domap {

Matching max_matching(const CompatibilityGraph& h) { return hopcroft_karp(h.csr()); }

std::optional<std::vector<std::uint64_t>> hall_violator(const CompatibilityGraph& h, const Matching& mt) {
  if (mt.size == h.left_size()) return std::nullopt;
  const auto reach = alternating_reach(h.csr(), mt);
  return std::vector<std::uint64_t>(reach.begin(), reach.end());
}

DominationMapping mapping_from_matching(const CompatibilityGraph& h, const Matching& mt) {
  if (mt.size != h.left_size()) throw DomainError("matching does not saturate the domain");
  std::vector<Word> table;
  table.reserve(h.left_size());
  for (std::uint64_t x = 0; x < h.left_size(); ++x) table.push_back(h.ball().unrank(mt.mate_left[x]));
  return DominationMapping(h.w(), h.graph(), std::move(table));
}

GraphDecision decide_graph(const DominationGraph& g, int w, std::uint64_t max_edges) {
  const CompatibilityGraph h(g, w, max_edges);
  const Matching mt = max_matching(h);
  GraphDecision d;
  d.left_size = h.left_size();
  d.right_size = h.right_size();
  d.edges = h.edge_count();
  d.matching_size = mt.size;
  d.exists = mt.size == h.left_size();
  if (d.exists) {
    d.mapping = mapping_from_matching(h, mt);
  } else {
    d.violator = *hall_violator(h, mt);
  }
  return d;
}

namespace {

void partitions(int parts, int remaining, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                std::size_t cap) {
  if (parts == 0) {
    if (remaining == 0) {
      if (out.size() >= cap) throw ResourceError("more than " + std::to_string(cap) + " degree sequences");
      out.push_back(cur);
    }
    return;
  }
  // Remaining parts are all >= min_part.
  for (int d = min_part; d * parts <= remaining; ++d) {
    cur.push_back(d);
    partitions(parts - 1, remaining - d, d, cur, out, cap);
    cur.pop_back();
  }
}

long long square_sum(const std::vector<int>& d) {
  long long s = 0;
  for (const int v : d) s += static_cast<long long>(v) * v;
  return s;
}

}  // namespace

std::vector<std::vector<int>> degree_multisets(int m, int n, std::size_t cap) {
  if (m < 1 || n < 1) throw DomainError("need m >= 1 and n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(m, n, 1, cur, out, cap);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto sa = square_sum(a);
    const auto sb = square_sum(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

AllGraphsDecision decide_all_graphs(int m, int n, int w, const AllGraphsOptions& opts) {
  AllGraphsDecision d;
  if (m > n) return d;  // some left vertex would be isolated
  // Every graph shares the same range, so counting settles it without enumerating.
  if (opts.pigeonhole_shortcut && pow2(static_cast<std::uint64_t>(m)) > ball_size({n, w})) return d;
  const auto seqs = degree_multisets(m, n, opts.max_graphs);
  d.graphs_total = seqs.size();
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    const auto g = DominationGraph::from_degrees(seqs[k]);
    ++d.graphs_tried;
    auto gd = decide_graph(g, w, opts.max_edges);
    if (gd.exists) {
      d.exists = true;
      d.equitable_succeeded = g.is_equitable();
      d.conjecture_counterexample = !d.equitable_succeeded;
      d.witness = g;
      d.mapping = std::move(gd.mapping);
      return d;
    }
  }
  return d;
}

}  // namespace domap
