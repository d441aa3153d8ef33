// Copyright 2026 lapbe contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lapbe {

/// Invalid problem specification (bad qubit counts, spacings, weights, ...).
class SpecificationError : public std::invalid_argument {
 public:
  explicit SpecificationError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

/// Malformed circuit structure (unknown qubits, overlapping controls, ...).
class StructuralError : public std::logic_error {
 public:
  explicit StructuralError(const std::string& msg) : std::logic_error(msg) {}
};

/// A configured resource cap (matrix dimension, statevector size) was hit.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Numerically degenerate input (e.g. an all-zero sample vector).
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace lapbe
