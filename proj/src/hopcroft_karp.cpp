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

#include "domap/hopcroft_karp.hpp"

#include <algorithm>

namespace domap {

namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

bool layer(const Csr& g, const Matching& mt, std::vector<std::uint32_t>& dist,
           std::vector<std::uint32_t>& queue) {
  queue.clear();
  const std::uint32_t left = g.left_size();
  for (std::uint32_t u = 0; u < left; ++u) {
    if (mt.mate_left[u] == kUnmatched) {
      dist[u] = 0;
      queue.push_back(u);
    } else {
      dist[u] = kFar;
    }
  }
  bool found = false;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::uint64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const std::uint32_t u2 = mt.mate_right[g.targets[e]];
      if (u2 == kUnmatched) {
        found = true;
      } else if (dist[u2] == kFar) {
        dist[u2] = dist[u] + 1;
        queue.push_back(u2);
      }
    }
  }
  return found;
}

bool augment(const Csr& g, Matching& mt, std::vector<std::uint32_t>& dist,
             std::vector<std::uint64_t>& it, std::vector<std::uint32_t>& stack, std::uint32_t root) {
  stack.clear();
  stack.push_back(root);
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    if (it[u] == g.offsets[u + 1]) {
      dist[u] = kFar;
      stack.pop_back();
      continue;
    }
    const std::uint32_t v = g.targets[it[u]];
    const std::uint32_t u2 = mt.mate_right[v];
    if (u2 == kUnmatched) {
      for (const std::uint32_t s : stack) {
        const std::uint32_t sv = g.targets[it[s]];
        mt.mate_right[sv] = s;
        mt.mate_left[s] = sv;
      }
      return true;
    }
    if (dist[u2] == dist[u] + 1) {
      stack.push_back(u2);
    } else {
      ++it[u];
    }
  }
  return false;
}

}  // namespace

Matching hopcroft_karp(const Csr& g) {
  const std::uint32_t left = g.left_size();
  Matching mt;
  mt.mate_left.assign(left, kUnmatched);
  mt.mate_right.assign(g.right_size, kUnmatched);
  for (std::uint32_t u = 0; u < left; ++u) {
    for (std::uint64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const std::uint32_t v = g.targets[e];
      if (mt.mate_right[v] == kUnmatched) {
        mt.mate_right[v] = u;
        mt.mate_left[u] = v;
        ++mt.size;
        break;
      }
    }
  }
  std::vector<std::uint32_t> dist(left), queue, stack;
  std::vector<std::uint64_t> it(left);
  while (mt.size < left && layer(g, mt, dist, queue)) {
    std::copy(g.offsets.begin(), g.offsets.end() - 1, it.begin());
    for (std::uint32_t u = 0; u < left; ++u) {
      if (mt.mate_left[u] == kUnmatched && augment(g, mt, dist, it, stack, u)) ++mt.size;
    }
  }
  return mt;
}

std::vector<std::uint32_t> alternating_reach(const Csr& g, const Matching& mt) {
  const std::uint32_t left = g.left_size();
  std::vector<char> seen_left(left, 0);
  std::vector<char> seen_right(g.right_size, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < left; ++u) {
    if (mt.mate_left[u] == kUnmatched) {
      seen_left[u] = 1;
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::uint64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const std::uint32_t v = g.targets[e];
      if (seen_right[v]) continue;
      seen_right[v] = 1;
      const std::uint32_t u2 = mt.mate_right[v];
      if (u2 != kUnmatched && !seen_left[u2]) {
        seen_left[u2] = 1;
        queue.push_back(u2);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace domap
