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

#ifndef DOMAP_DMAP_IO_HPP_
#define DOMAP_DMAP_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "domap/mapping.hpp"

namespace domap {

// .dmap text format:
//
//   m n w
//   d_1 d_2 ... d_m
//   X Y          (2^m lines, X in increasing integer order)
//
// X and Y are bitstrings printed position 1 first. Vertex i owns the next
// d_i positions, so blocks are consecutive in vertex order.
DominationMapping read_dmap(std::istream& in);
DominationMapping read_dmap_file(const std::filesystem::path& path);

// Writes `map`; mappings whose blocks are not consecutive are written via
// DominationMapping::with_consecutive_blocks().
void write_dmap(std::ostream& out, const DominationMapping& map);
void write_dmap_file(const std::filesystem::path& path, const DominationMapping& map);
std::string to_dmap_string(const DominationMapping& map);

}  // namespace domap

#endif  // DOMAP_DMAP_IO_HPP_
