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

#include "domap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "domap/asymptotic.hpp"
#include "domap/ball.hpp"
#include "domap/bounds.hpp"
#include "domap/constructions.hpp"
#include "domap/dmap_io.hpp"
#include "domap/errors.hpp"
#include "domap/lp.hpp"
#include "domap/matching.hpp"

namespace domap {

namespace {

using Row = std::vector<std::string>;

void print_rows(std::ostream& out, const std::vector<Row>& rows, bool human) {
  if (!human) {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - r[i].size(), ' ') + r[i];
    }
    out << line << '\n';
  }
}

std::string flag(bool b) { return b ? "1" : "0"; }

DominationGraph pick_graph(int m, int n, const std::vector<int>& degrees) {
  if (degrees.empty()) return DominationGraph::equitable(m, n);
  if (static_cast<int>(degrees.size()) != m) throw DimensionError("--degrees needs exactly m entries");
  int sum = 0;
  for (int d : degrees) sum += d;
  if (sum != n) throw DimensionError("--degrees must sum to n");
  return DominationGraph::from_degrees(degrees);
}

std::optional<std::uint64_t> find_image(const DominationMapping& map, const Word& y) {
  for (std::uint64_t x = 0; x < map.table().size(); ++x) {
    if (map.image(x) == y) return x;
  }
  return std::nullopt;
}

void emit_mapping(const DominationMapping& map, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_dmap(out, map);
  } else {
    write_dmap_file(path, map);
  }
}

struct Options {
  int m = 0, n = 0, w = 0;
  int m_min = 1, m_max = 12;
  int level = 1;
  int vertex = 0;
  int delta = 0;
  double epsilon = 0;
  std::string kind, input, input2, output, file, bits, emit, dump, log_base = "natural";
  std::vector<int> degrees;
  bool equitable = false, all_graphs = false, human = false, show_graph = false;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::uint64_t max_edges = kDefaultMaxEdges;
  std::uint64_t report_max_edges = 20'000'000;
};

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto g = pick_graph(o.m, o.n, o.degrees);
  const auto r = bound_report(o.m, o.n, o.w, g);
  out << "m\tn\tw\tsum_ok\ttight_ok\tgeneral_value\tgeneral_ok\tperfect\n" << to_tsv(r) << '\n';
  return r.sum_condition_ok && r.tight_condition_ok && r.general_bound_ok ? kExitOk : kExitNegative;
}

int cmd_bounds_sweep(const Options& o, std::ostream& out) {
  std::vector<Row> rows{{"m", "lower", "upper"}};
  const UpperBoundTable table(std::max(o.m_max, 3 * o.w) + 1, o.w, default_base_triples(std::max(o.m_max, 3 * o.w) + 1, o.w));
  for (int m = o.m_min; m <= o.m_max; ++m) {
    const auto up = table.upper(m, o.w);
    rows.push_back({std::to_string(m), std::to_string(nu_lower_bound(m, o.w)), up ? std::to_string(*up) : "inf"});
  }
  print_rows(out, rows, o.human);
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  std::optional<DominationMapping> map;
  auto need_input = [&]() {
    if (o.input.empty()) throw DomainError("--input is required for --kind " + o.kind);
    return read_dmap_file(o.input);
  };
  if (o.kind == "identity") {
    map = identity_mapping(o.m, o.w > 0 ? o.w : o.m);
  } else if (o.kind == "w1") {
    map = w1_perfect(o.m);
  } else if (o.kind == "w2") {
    map = w2_recursive(o.level);
  } else if (o.kind == "product") {
    if (o.input2.empty()) throw DomainError("--input2 is required for --kind product");
    map = product(need_input(), read_dmap_file(o.input2));
  } else if (o.kind == "shorten") {
    map = shorten(need_input(), o.vertex - 1);
  } else if (o.kind == "extend") {
    map = extend_n(need_input());
  } else if (o.kind == "relax") {
    map = relax_w(need_input());
  } else {
    throw DomainError("unknown --kind " + o.kind);
  }
  const auto v = verify_mapping(*map);
  if (!v) throw ConstructionError("constructed mapping failed verification: " + v.detail);
  emit_mapping(*map, o.output, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto map = read_dmap_file(o.file);
  const auto v = verify_mapping(map);
  if (v) {
    out << "ACCEPT\t" << map.m() << '\t' << map.n() << '\t' << map.w() << '\n';
    return kExitOk;
  }
  out << "REJECT\t" << to_string(*v.violated) << '\t' << v.detail << '\n';
  return kExitNegative;
}

int cmd_decide_matching(const Options& o, std::ostream& out) {
  const int modes = int(o.equitable) + int(!o.degrees.empty()) + int(o.all_graphs);
  if (modes > 1) throw DomainError("choose one of --equitable, --degrees, --all-graphs");
  std::optional<DominationMapping> found;
  if (o.all_graphs) {
    AllGraphsOptions opts;
    opts.max_edges = o.max_edges;
    const auto d = decide_all_graphs(o.m, o.n, o.w, opts);
    out << "exists\t" << flag(d.exists) << "\ngraphs_tried\t" << d.graphs_tried << "\ngraphs_total\t"
        << d.graphs_total << "\nequitable_succeeded\t" << flag(d.equitable_succeeded)
        << "\nconjecture_counterexample\t" << flag(d.conjecture_counterexample) << '\n';
    if (d.witness) out << "graph\t" << d.witness->describe() << '\n';
    found = d.mapping;
  } else {
    const auto g = pick_graph(o.m, o.n, o.degrees);
    const auto d = decide_graph(g, o.w, o.max_edges);
    out << "exists\t" << flag(d.exists) << "\nmatching\t" << d.matching_size << "\nleft\t" << d.left_size
        << "\nright\t" << d.right_size << "\nedges\t" << d.edges << "\ngraph\t" << g.describe() << '\n';
    if (!d.exists) out << "violator_size\t" << d.violator.size() << '\n';
    found = d.mapping;
  }
  if (found) {
    const auto v = verify_mapping(*found);
    if (!v) throw ConstructionError("extracted mapping failed verification: " + v.detail);
    if (!o.emit.empty()) emit_mapping(*found, o.emit, out);
    return kExitOk;
  }
  return kExitNegative;
}

int cmd_decide_lp(const Options& o, std::ostream& out) {
  const auto lp = build_reduced_lp(o.m, o.n, o.w);
  if (!o.dump.empty()) {
    if (o.dump == "-") {
      dump_astar(out, lp);
    } else {
      std::ofstream f(o.dump);
      if (!f) throw ResourceError("cannot write " + o.dump);
      dump_astar(f, lp);
    }
  }
  const auto sol = solve_reduced_lp(lp);
  const BigInt target = pow2(static_cast<std::uint64_t>(o.m));
  const bool exists = sol.optimum == Rational(target);
  out << "optimum\t" << to_string(sol.optimum) << "\ntarget\t" << to_string(target) << "\nvariables\t"
      << lp.omega.size() << "\nconstraints\t" << lp.astar.size() << "\nexists_equitable\t" << flag(exists) << '\n';
  return exists ? kExitOk : kExitNegative;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const auto g = pick_graph(o.m, o.n, o.degrees);
  const Word v = Word::from_string(o.bits);
  if (static_cast<int>(v.size()) != o.m) throw DimensionError("--word must have m bits");
  out << "psi\t" << to_string(psi(v, g, o.w)) << '\n';
  return kExitOk;
}

int cmd_cond1(const Options& o, std::ostream& out) {
  const bool holds = check_cond1(o.m, BigInt(o.delta), o.w);
  out << "holds\t" << flag(holds) << "\nrhs\t" << to_string(cond1_rhs(o.m, o.w)) << "\nmin_delta\t"
      << to_string(cond1_min_delta(o.m, o.w)) << '\n';
  return holds ? kExitOk : kExitNegative;
}

int cmd_cond2(const Options& o, std::ostream& out) {
  LogBase base;
  if (o.log_base == "natural") {
    base = LogBase::kNatural;
  } else if (o.log_base == "binary") {
    base = LogBase::kBinary;
  } else {
    throw DomainError("--log-base must be natural or binary");
  }
  const auto r = check_cond2(o.m, o.delta, o.w, o.epsilon, base);
  out << "holds\t" << flag(r.holds) << "\nsize_ok\t" << flag(r.size_ok) << "\nn_epsilon\t" << to_string(r.n_eps)
      << "\nn_epsilon_ok\t" << flag(r.n_epsilon_ok) << "\nnecessary_ok\t" << flag(r.necessary_ok) << "\ncond1\t"
      << flag(r.cond1) << '\n';
  return r.holds ? kExitOk : kExitNegative;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const auto map = read_dmap_file(o.file);
  if (!verify_mapping(map)) throw DomainError("mapping file does not verify");
  const Word x = Word::from_string(o.bits);
  if (static_cast<int>(x.size()) != map.m()) throw DimensionError("input word must have m bits");
  out << map.image(x.to_index()).to_string() << '\n';
  // The caller needs the graph to translate image positions to wires.
  if (o.show_graph) out << "graph\t" << map.graph().describe() << '\n';
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const auto map = read_dmap_file(o.file);
  if (!verify_mapping(map)) throw DomainError("mapping file does not verify");
  const Word y = Word::from_string(o.bits);
  if (static_cast<int>(y.size()) != map.n()) throw DimensionError("codeword must have n bits");
  const auto x = find_image(map, y);
  if (!x) throw DomainError(y.to_string() + " is not an image of the mapping");
  out << Word::from_index(*x, static_cast<std::size_t>(map.m())).to_string() << '\n';
  return kExitOk;
}

Row report_row(const Options& o, const UpperBoundTable& table, int m) {
  Row r{std::to_string(m), std::to_string(o.w)};
  const auto sum_bound = min_n_for_cardinality(m, o.w);
  const auto lower = nu_lower_bound(m, o.w);
  const auto up = table.upper(m, o.w);
  r.push_back(std::to_string(sum_bound));
  r.push_back(std::to_string(2 * m - o.w));
  r.push_back(std::to_string(lower));
  r.push_back(up ? std::to_string(*up) : "inf");
  const int n = static_cast<int>(lower);
  r.push_back(flag(decide_lp(m, n, o.w).exists_equitable));
  try {
    const auto g = DominationGraph::equitable(m, n);
    if (m > kMaxTableDimension || count_compatibility_edges(g, o.w) > o.report_max_edges) {
      r.push_back("SKIPPED");
    } else {
      r.push_back(flag(decide_graph(g, o.w, o.report_max_edges).exists));
    }
  } catch (const ResourceError&) {
    r.push_back("SKIPPED");
  }
  std::string first = "-";
  const std::int64_t stop = up ? *up : lower + 64;
  for (std::int64_t k = lower; k <= stop; ++k) {
    if (decide_lp(m, static_cast<int>(k), o.w).exists_equitable) {
      first = std::to_string(k);
      break;
    }
  }
  r.push_back(first);
  return r;
}

int cmd_report(const Options& o, std::ostream& out) {
  const int reach = std::max(o.m_max, 3 * o.w) + 1;
  const UpperBoundTable table(reach, o.w, default_base_triples(reach, o.w));
  const int count = std::max(0, o.m_max - o.m_min + 1);
  std::vector<Row> body(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> failure(body.size());
  // Rows are independent; workers claim them in order and results land by index.
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int k = next++; k < count; k = next++) {
      try {
        body[static_cast<std::size_t>(k)] = report_row(o, table, o.m_min + k);
      } catch (...) {
        failure[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(o.jobs, 1, std::max(count, 1));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }
  std::vector<Row> rows{{"m", "w", "sum_bound", "tight_bound", "lower", "upper", "lp_at_lower", "matching_at_lower",
                         "lp_min_n"}};
  rows.insert(rows.end(), body.begin(), body.end());
  print_rows(out, rows, o.human);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and decide (m,n,w)-domination mappings", "domap"};
  app.require_subcommand(1);
  Options o;

  auto add_triple = [&](CLI::App* s) {
    s->add_option("m", o.m, "domain length")->required()->check(CLI::PositiveNumber);
    s->add_option("n", o.n, "codeword length")->required()->check(CLI::PositiveNumber);
    s->add_option("w", o.w, "weight bound")->required()->check(CLI::NonNegativeNumber);
  };

  auto* bounds = app.add_subcommand("bounds", "necessary conditions as one TSV row");
  add_triple(bounds);
  bounds->add_option("--degrees", o.degrees, "left degrees, comma separated")->delimiter(',');

  auto* sweep = app.add_subcommand("bounds-sweep", "lower and upper bounds on the least n, per m");
  sweep->add_option("w", o.w)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--m-min", o.m_min)->check(CLI::PositiveNumber);
  sweep->add_option("--m-max", o.m_max)->check(CLI::PositiveNumber);
  sweep->add_flag("--human", o.human, "aligned columns instead of TSV");

  auto* construct = app.add_subcommand("construct", "build a mapping and write it as .dmap");
  construct->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"identity", "w1", "w2", "product", "shorten", "extend", "relax"}));
  construct->add_option("--m", o.m)->check(CLI::PositiveNumber);
  construct->add_option("--w", o.w)->check(CLI::NonNegativeNumber);
  construct->add_option("--level", o.level)->check(CLI::PositiveNumber);
  construct->add_option("--vertex", o.vertex, "1-based left vertex for shorten")->check(CLI::PositiveNumber);
  construct->add_option("--input", o.input);
  construct->add_option("--input2", o.input2);
  construct->add_option("--output,-o", o.output, "output path, stdout when omitted");

  auto* verify = app.add_subcommand("verify", "check a .dmap file");
  verify->add_option("file", o.file)->required();

  auto* matching = app.add_subcommand("decide-matching", "existence by bipartite matching");
  add_triple(matching);
  matching->add_flag("--equitable", o.equitable);
  matching->add_option("--degrees", o.degrees)->delimiter(',');
  matching->add_flag("--all-graphs", o.all_graphs);
  matching->add_option("--emit", o.emit, "write the mapping found");
  matching->add_option("--max-edges", o.max_edges);

  auto* lpc = app.add_subcommand("decide-lp", "existence for the equitable graph by the reduced LP");
  add_triple(lpc);
  lpc->add_option("--dump-astar", o.dump, "write the reduced constraint matrix");

  auto* psic = app.add_subcommand("psi", "additional neighbourhood of a domain word");
  add_triple(psic);
  psic->add_option("--word", o.bits)->required();
  psic->add_option("--degrees", o.degrees)->delimiter(',');

  auto* c1 = app.add_subcommand("cond1", "evaluate the degree condition δ^w >= 2^(2w-1) Σ C(m-w, j)");
  c1->add_option("m", o.m)->required()->check(CLI::PositiveNumber);
  c1->add_option("delta", o.delta)->required()->check(CLI::NonNegativeNumber);
  c1->add_option("w", o.w)->required()->check(CLI::PositiveNumber);

  auto* c2 = app.add_subcommand("cond2", "evaluate the size and cardinality conditions for (m, δm, w)");
  c2->add_option("m", o.m)->required()->check(CLI::PositiveNumber);
  c2->add_option("delta", o.delta)->required()->check(CLI::PositiveNumber);
  c2->add_option("w", o.w)->required()->check(CLI::PositiveNumber);
  c2->add_option("--epsilon", o.epsilon)->required();
  c2->add_option("--log-base", o.log_base)->check(CLI::IsMember({"natural", "binary"}));

  auto* enc = app.add_subcommand("encode", "look up φ(x)");
  enc->add_option("file", o.file)->required();
  enc->add_option("x", o.bits)->required();
  enc->add_flag("--show-graph", o.show_graph, "also print the domination graph");
  auto* dec = app.add_subcommand("decode", "invert φ");
  dec->add_option("file", o.file)->required();
  dec->add_option("y", o.bits)->required();

  auto* report = app.add_subcommand("report", "bounds, constructions and LP/matching verdicts per m");
  report->add_option("w", o.w)->required()->check(CLI::PositiveNumber);
  report->add_option("--m-min", o.m_min)->check(CLI::PositiveNumber);
  report->add_option("--m-max", o.m_max)->check(CLI::PositiveNumber);
  report->add_option("--max-edges", o.report_max_edges);
  report->add_flag("--human", o.human);
  report->add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*bounds) return cmd_bounds(o, out);
    if (*sweep) return cmd_bounds_sweep(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*matching) return cmd_decide_matching(o, out);
    if (*lpc) return cmd_decide_lp(o, out);
    if (*psic) return cmd_psi(o, out);
    if (*c1) return cmd_cond1(o, out);
    if (*c2) return cmd_cond2(o, out);
    if (*enc) return cmd_encode(o, out);
    if (*dec) return cmd_decode(o, out);
    if (*report) return cmd_report(o, out);
  } catch (const std::exception& e) {
    err << "domap: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace domap
