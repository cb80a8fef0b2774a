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

#ifndef DOMAP_ERRORS_HPP_
#define DOMAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace domap {

// Word or matrix lengths that do not agree with the graph or parameters.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range rank, overweight word, or a parameter outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed .dmap file or bitstring.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A descendant-array pair that does not describe a domination mapping.
class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance is too large for the configured memory or enumeration caps.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction violated one of its own internal constraints.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domap

#endif  // DOMAP_ERRORS_HPP_
