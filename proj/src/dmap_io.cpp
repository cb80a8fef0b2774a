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

#include "domap/dmap_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "domap/errors.hpp"

namespace domap {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

DominationMapping read_dmap(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) fail(lineno, "missing header 'm n w'");
  int m = 0;
  int n = 0;
  int w = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> m >> n >> w) || (hs >> extra)) fail(lineno, "header must be 'm n w'");
  }
  if (m < 1 || m > kMaxTableDimension || n < 1 || w < 0) fail(lineno, "header values out of range");

  if (!next_content_line(in, line, lineno)) fail(lineno, "missing degree line");
  std::vector<int> degrees;
  {
    std::istringstream ds(line);
    int d = 0;
    while (ds >> d) degrees.push_back(d);
    if (!ds.eof()) fail(lineno, "degree line must contain integers only");
  }
  if (static_cast<int>(degrees.size()) != m) fail(lineno, "expected " + std::to_string(m) + " degrees");
  long total = 0;
  for (int d : degrees) {
    if (d < 1) fail(lineno, "degrees must be positive");
    total += d;
  }
  if (total != n) fail(lineno, "degrees sum to " + std::to_string(total) + ", expected n = " + std::to_string(n));

  const std::uint64_t rows = std::uint64_t{1} << m;
  std::vector<Word> table;
  table.reserve(rows);
  std::unordered_set<Word> seen;
  while (next_content_line(in, line, lineno)) {
    if (table.size() == rows) fail(lineno, "more than 2^m rows");
    std::istringstream rs(line);
    std::string xs;
    std::string ys;
    std::string extra;
    if (!(rs >> xs >> ys) || (rs >> extra)) fail(lineno, "row must be 'X Y'");
    if (static_cast<int>(xs.size()) != m || static_cast<int>(ys.size()) != n) fail(lineno, "row has wrong lengths");
    Word x;
    Word y;
    try {
      x = Word::from_string(xs);
      y = Word::from_string(ys);
    } catch (const ParseError& e) {
      fail(lineno, e.what());
    }
    if (x.to_index() != table.size()) fail(lineno, "rows must be ordered by increasing X");
    if (!seen.insert(y).second) fail(lineno, "duplicate image " + ys);
    table.push_back(std::move(y));
  }
  if (table.size() != rows) {
    fail(lineno, "expected " + std::to_string(rows) + " rows, found " + std::to_string(table.size()));
  }
  return DominationMapping(w, DominationGraph::from_degrees(degrees), std::move(table));
}

DominationMapping read_dmap_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_dmap(in);
}

void write_dmap(std::ostream& out, const DominationMapping& input) {
  const DominationMapping map = input.with_consecutive_blocks();
  out << map.m() << ' ' << map.n() << ' ' << map.w() << '\n';
  const auto degrees = map.graph().degrees();
  for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? " " : "") << degrees[i];
  out << '\n';
  const auto m = static_cast<std::size_t>(map.m());
  for (std::uint64_t x = 0; x < map.table().size(); ++x) {
    out << Word::from_index(x, m).to_string() << ' ' << map.table()[x].to_string() << '\n';
  }
}

void write_dmap_file(const std::filesystem::path& path, const DominationMapping& map) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dmap(out, map);
}

std::string to_dmap_string(const DominationMapping& map) {
  std::ostringstream os;
  write_dmap(os, map);
  return os.str();
}

}  // namespace domap
