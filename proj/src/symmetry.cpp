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

#include "domap/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "domap/compatibility.hpp"
#include "domap/errors.hpp"

namespace domap {

namespace {

std::pair<int, int> domain_class(std::uint64_t x, const EquitableSplit& s) {
  std::pair<int, int> c{0, 0};
  for (int i = 0; i < s.m; ++i) {
    if (domain_bit(x, s.m, i)) ++(i < s.m1 ? c.first : c.second);
  }
  return c;
}

std::uint64_t support_mask(const Word& y, const DominationGraph& g) {
  std::uint64_t mask = 0;
  for (const auto pos : y.support()) mask |= std::uint64_t{1} << g.owner(pos);
  return mask;
}

}  // namespace

std::pair<int, int> range_class(const Word& y, const EquitableSplit& s, const DominationGraph& g) {
  std::pair<int, int> c{0, 0};
  const std::uint64_t mask = support_mask(y, g);
  for (int i = 0; i < s.m; ++i) {
    if ((mask >> i) & 1U) ++(i < s.m1 ? c.first : c.second);
  }
  return c;
}

FullLp::FullLp(int m, int n, int w, std::size_t max_edges)
    : split_(equitable_split(m, n, w)),
      graph_(DominationGraph::equitable(m, n)),
      ball_({n, w}),
      left_rows_(std::size_t{1} << m) {
  if (m > 20) throw ResourceError("full LP is meant for tiny instances");
  const CompatibilityGraph h(graph_, w, max_edges);
  first_edge_.push_back(0);
  range_edges_.resize(ball_.size());
  for (std::uint64_t x = 0; x < h.left_size(); ++x) {
    const auto dc = domain_class(x, split_);
    for (const auto r : h.neighbors(x)) {
      const auto rc = range_class(ball_.unrank(r), split_, graph_);
      range_edges_[r].push_back(edges_.size());
      edges_.emplace_back(x, r);
      orbit_.push_back({dc.first, dc.second, rc.first, rc.second});
    }
    first_edge_.push_back(edges_.size());
  }
}

std::size_t FullLp::edge_index(std::uint64_t x, std::uint32_t rank) const {
  const auto lo = edges_.begin() + static_cast<std::ptrdiff_t>(first_edge_.at(x));
  const auto hi = edges_.begin() + static_cast<std::ptrdiff_t>(first_edge_.at(x + 1));
  const auto it = std::lower_bound(lo, hi, std::make_pair(x, rank));
  if (it == hi || it->second != rank) throw DomainError("not an edge of the compatibility graph");
  return static_cast<std::size_t>(it - edges_.begin());
}

std::pair<int, int> FullLp::row_class(std::size_t row) const {
  if (row < left_rows_) return domain_class(row, split_);
  return range_class(ball_.unrank(row - left_rows_), split_, graph_);
}

std::vector<Rational> FullLp::row_sums(const std::vector<Rational>& x) const {
  if (x.size() != edges_.size()) throw DimensionError("vector length differs from the edge count");
  std::vector<Rational> sums(row_count());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    sums[edges_[e].first] += x[e];
    sums[left_rows_ + edges_[e].second] += x[e];
  }
  return sums;
}

bool FullLp::feasible(const std::vector<Rational>& x) const {
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (const auto& s : row_sums(x)) {
    if (s > 1) return false;
  }
  return true;
}

Rational FullLp::objective(const std::vector<Rational>& x) const {
  Rational total;
  for (const auto& v : x) total += v;
  return total;
}

std::vector<std::vector<BigInt>> FullLp::collapsed_rows() const {
  const auto omega = orbit_indices(split_);
  std::map<OrbitIndex, std::size_t> column;
  for (std::size_t k = 0; k < omega.size(); ++k) column[omega[k]] = k;
  std::vector<std::vector<BigInt>> rows(row_count(), std::vector<BigInt>(omega.size()));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const std::size_t k = column.at(orbit_[e]);
    rows[edges_[e].first][k] += 1;
    rows[left_rows_ + edges_[e].second][k] += 1;
  }
  return rows;
}

EquitableGroup::EquitableGroup(const FullLp& lp) : lp_(&lp) {
  const auto& s = lp.split();
  vertex_classes_.resize(2);
  for (int i = 0; i < s.m; ++i) vertex_classes_[i < s.m1 ? 0 : 1].push_back(i);
  std::map<std::uint64_t, std::vector<std::uint32_t>> by_support;
  for (std::uint64_t r = 0; r < lp.ball().size(); ++r) {
    by_support[support_mask(lp.ball().unrank(r), lp.graph())].push_back(static_cast<std::uint32_t>(r));
  }
  for (auto& [mask, ranks] : by_support) support_classes_.push_back(std::move(ranks));
}

BigInt EquitableGroup::order() const {
  BigInt total = 1;
  auto fact = [](std::size_t k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
  };
  for (const auto& c : vertex_classes_) total *= fact(c.size());
  for (const auto& c : support_classes_) total *= fact(c.size());
  return total;
}

GroupElement EquitableGroup::random(std::mt19937_64& rng) const {
  GroupElement g;
  g.vertex_perm.resize(static_cast<std::size_t>(lp_->split().m));
  for (const auto& c : vertex_classes_) {
    auto image = c;
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t t = 0; t < c.size(); ++t) g.vertex_perm[static_cast<std::size_t>(c[t])] = image[t];
  }
  g.range_perm.resize(lp_->ball().size());
  for (const auto& c : support_classes_) {
    auto image = c;
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t t = 0; t < c.size(); ++t) g.range_perm[c[t]] = image[t];
  }
  return g;
}

std::vector<GroupElement> EquitableGroup::enumerate(std::size_t limit) const {
  if (order() > limit) throw ResourceError("group too large to enumerate");
  // Each factor is a list of (domain, image) orderings; the group is their
  // Cartesian product.
  std::vector<std::vector<std::vector<std::uint32_t>>> factors;
  std::vector<std::vector<std::uint32_t>> domains;
  auto add_factor = [&](std::vector<std::uint32_t> dom) {
    std::vector<std::vector<std::uint32_t>> perms;
    auto p = dom;
    std::sort(p.begin(), p.end());
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    domains.push_back(std::move(dom));
    factors.push_back(std::move(perms));
  };
  for (const auto& c : vertex_classes_) add_factor(std::vector<std::uint32_t>(c.begin(), c.end()));
  for (const auto& c : support_classes_) add_factor(c);

  const std::size_t vertex_factors = vertex_classes_.size();
  std::vector<GroupElement> out;
  std::vector<std::size_t> digit(factors.size(), 0);
  while (true) {
    GroupElement g;
    g.vertex_perm.resize(static_cast<std::size_t>(lp_->split().m));
    g.range_perm.resize(lp_->ball().size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& img = factors[f][digit[f]];
      for (std::size_t t = 0; t < img.size(); ++t) {
        if (f < vertex_factors) {
          g.vertex_perm[domains[f][t]] = static_cast<int>(img[t]);
        } else {
          g.range_perm[domains[f][t]] = img[t];
        }
      }
    }
    out.push_back(std::move(g));
    std::size_t f = 0;
    while (f < factors.size() && ++digit[f] == factors[f].size()) digit[f++] = 0;
    if (f == factors.size()) break;
  }
  return out;
}

std::uint32_t EquitableGroup::move_word(const std::vector<int>& vertex_perm, std::uint32_t rank) const {
  const auto& g = lp_->graph();
  const Word y = lp_->ball().unrank(rank);
  Word z(y.size());
  for (int i = 0; i < g.m(); ++i) {
    const auto& from = g.block(i);
    const auto& to = g.block(vertex_perm[static_cast<std::size_t>(i)]);
    for (std::size_t t = 0; t < from.size(); ++t) {
      if (y.test(from[t])) z.set(to[t]);
    }
  }
  return static_cast<std::uint32_t>(lp_->ball().rank(z));
}

std::vector<std::size_t> EquitableGroup::edge_permutation(const GroupElement& g) const {
  const int m = lp_->split().m;
  std::vector<std::size_t> pi(lp_->edge_count());
  for (std::size_t e = 0; e < pi.size(); ++e) {
    const auto [x, r] = lp_->edge(e);
    std::uint64_t x2 = 0;
    for (int i = 0; i < m; ++i) {
      if (domain_bit(x, m, i)) x2 |= std::uint64_t{1} << (m - 1 - g.vertex_perm[static_cast<std::size_t>(i)]);
    }
    pi[e] = lp_->edge_index(x2, g.range_perm[move_word(g.vertex_perm, r)]);
  }
  return pi;
}

std::vector<Rational> EquitableGroup::act(const GroupElement& g, const std::vector<Rational>& x) const {
  const auto pi = edge_permutation(g);
  std::vector<Rational> out(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) out[pi[e]] = x[e];
  return out;
}

std::vector<Rational> group_average(const EquitableGroup& group, const std::vector<Rational>& x) {
  std::vector<Rational> sum(x.size());
  const auto all = group.enumerate();
  for (const auto& g : all) {
    const auto y = group.act(g, x);
    for (std::size_t e = 0; e < x.size(); ++e) sum[e] += y[e];
  }
  const Rational count(BigInt(static_cast<unsigned long>(all.size())));
  for (auto& v : sum) v /= count;
  return sum;
}

bool is_orbit_regular(const FullLp& lp, const std::vector<Rational>& x) {
  std::map<OrbitIndex, Rational> value;
  for (std::size_t e = 0; e < x.size(); ++e) {
    auto [it, inserted] = value.emplace(lp.edge_orbit(e), x[e]);
    if (!inserted && it->second != x[e]) return false;
  }
  return true;
}

std::vector<Rational> random_feasible(const FullLp& lp, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::vector<Rational> x(lp.edge_count());
  for (auto& v : x) v = pick(rng);
  Rational top;
  for (const auto& s : lp.row_sums(x)) top = std::max(top, s);
  if (sgn(top) > 0) {
    for (auto& v : x) v /= top;
  }
  return x;
}

}  // namespace domap
