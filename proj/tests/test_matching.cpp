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

#include <doctest.h>

#include <algorithm>

#include "domap/asymptotic.hpp"
#include "domap/ball.hpp"
#include "domap/bounds.hpp"
#include "domap/compatibility.hpp"
#include "domap/errors.hpp"
#include "domap/matching.hpp"

using namespace domap;

TEST_CASE("the (2,4,1) compatibility graph") {
  const int deg[] = {2, 2};
  const CompatibilityGraph h(DominationGraph::from_degrees(deg), 1);
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"00", "0000"}, {"01", "0000"}, {"01", "0001"}, {"01", "0010"}, {"10", "0000"}, {"10", "0100"},
      {"10", "1000"}, {"11", "0000"}, {"11", "0001"}, {"11", "0010"}, {"11", "0100"}, {"11", "1000"},
  };
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::uint64_t x = 0; x < h.left_size(); ++x) {
    for (const auto r : h.neighbors(x)) edges.emplace_back(Word::from_index(x, 2).to_string(), h.ball().unrank(r).to_string());
  }
  CHECK(edges == golden);
  CHECK(h.edge_count() == 12);
  CHECK(max_matching(h).size == 4);
}

TEST_CASE("tiny compatibility graphs") {
  const int one[] = {1};
  const CompatibilityGraph h(DominationGraph::from_degrees(one), 1);
  CHECK(h.edge_count() == 3);
  CHECK(h.neighbors(0).size() == 1);
  CHECK(h.neighbors(1).size() == 2);
}

TEST_CASE("adjacency matches the domination predicate") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 7; ++n) {
      for (const auto& seq : degree_multisets(m, n, 1000)) {
        for (int w = 0; w <= 3; ++w) {
          const auto g = DominationGraph::from_degrees(seq);
          const CompatibilityGraph h(g, w);
          std::uint64_t total = 0;
          for (std::uint64_t x = 0; x < h.left_size(); ++x) {
            std::vector<std::uint32_t> expect;
            for (std::uint64_t r = 0; r < h.right_size(); ++r) {
              if (dominates(Word::from_index(x, static_cast<std::size_t>(m)), h.ball().unrank(r), g)) {
                expect.push_back(static_cast<std::uint32_t>(r));
              }
            }
            const auto got = h.neighbors(x);
            CHECK(std::vector<std::uint32_t>(got.begin(), got.end()) == expect);
            total += expect.size();
          }
          CHECK(h.neighbors(0).size() == 1);
          CHECK(count_compatibility_edges(g, w) == total);
        }
      }
    }
  }
}

TEST_CASE("edge budget") {
  const auto g = DominationGraph::equitable(12, 90);
  CHECK_THROWS_AS(CompatibilityGraph(g, 2, 1000), ResourceError);
}

TEST_CASE("decide_graph") {
  const int d22[] = {2, 2};
  auto d = decide_graph(DominationGraph::from_degrees(d22), 1);
  CHECK(d.exists);
  CHECK(d.violator.empty());
  REQUIRE(d.mapping.has_value());
  CHECK(verify_mapping(*d.mapping).accepted);

  d = decide_graph(DominationGraph::equitable(3, 4), 2);
  CHECK(d.matching_size == 8);
  REQUIRE(d.mapping.has_value());
  CHECK(verify_mapping(*d.mapping).accepted);

  for (const auto& seq : degree_multisets(4, 5, 100)) CHECK_FALSE(decide_graph(DominationGraph::from_degrees(seq), 2).exists);

  d = decide_graph(DominationGraph::equitable(11, 23), 3);
  CHECK(d.exists);
  CHECK(d.right_size == 2048);
  CHECK(verify_mapping(*d.mapping).accepted);

  // Pigeonhole.
  d = decide_graph(DominationGraph::equitable(4, 4), 1);
  CHECK_FALSE(d.exists);
  CHECK(d.matching_size <= 5);
}

TEST_CASE("hall violators are genuine bad sets") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = m; n <= 2 * m; ++n) {
      for (int w = 1; w <= 3; ++w) {
        const CompatibilityGraph h(DominationGraph::equitable(m, n), w);
        const auto mt = max_matching(h);
        const auto x = hall_violator(h, mt);
        if (mt.size == h.left_size()) {
          CHECK_FALSE(x.has_value());
          continue;
        }
        REQUIRE(x.has_value());
        CHECK(h.neighborhood_size(*x) < x->size());
        CHECK(x->size() - h.neighborhood_size(*x) == h.left_size() - mt.size);
        const auto closed = closure(*x, m);
        CHECK(closed.size() == x->size());
        CHECK(is_d_closed(closed, m));
        CHECK(h.neighborhood_size(closed) < closed.size());
      }
    }
  }
  const int d22[] = {2, 2};
  const CompatibilityGraph h(DominationGraph::from_degrees(d22), 1);
  CHECK_FALSE(hall_violator(h, max_matching(h)).has_value());
}

TEST_CASE("degree multisets are ordered from the equitable one") {
  const auto seqs = degree_multisets(4, 9, 100);
  REQUIRE(!seqs.empty());
  CHECK(seqs.front() == std::vector<int>{2, 2, 2, 3});
  CHECK(seqs.back() == std::vector<int>{1, 1, 1, 6});
  CHECK(seqs.size() == 6);
  CHECK_THROWS_AS(degree_multisets(10, 40, 5), ResourceError);
}

TEST_CASE("decide_all_graphs") {
  auto d = decide_all_graphs(3, 4, 2);
  CHECK(d.exists);
  CHECK(d.equitable_succeeded);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->degree_sequence() == std::vector<int>{1, 1, 2});
  CHECK(verify_mapping(*d.mapping).accepted);

  CHECK(decide_all_graphs(4, 6, 2).exists);

  AllGraphsOptions exhaustive;
  exhaustive.pigeonhole_shortcut = false;
  d = decide_all_graphs(4, 5, 2, exhaustive);
  CHECK_FALSE(d.exists);
  CHECK(d.graphs_tried == d.graphs_total);

  CHECK_FALSE(decide_all_graphs(3, 2, 1).exists);
}

TEST_CASE("existence is monotone in n and w") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 7; ++n) {
      for (int w = 1; w <= 3; ++w) {
        if (!decide_all_graphs(m, n, w).exists) continue;
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(w);
        CHECK(decide_all_graphs(m, n + 1, w).exists);
        CHECK(decide_all_graphs(m, n, w + 1).exists);
      }
    }
  }
}

TEST_CASE("equitable graphs on small instances") {
  // Counterexamples to the equitable-graph conjecture would be reported here;
  // the check only asserts consistency of the flags.
  int counterexamples = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 12; ++n) {
      for (int w = 1; w <= 3; ++w) {
        const auto d = decide_all_graphs(m, n, w);
        if (d.exists) CHECK(d.conjecture_counterexample == !d.equitable_succeeded);
        counterexamples += d.conjecture_counterexample;
      }
    }
  }
  MESSAGE("equitable-graph counterexamples found: " << counterexamples);
}
