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

/**
 * @file
 * Exact statevector simulation of IR circuits, extraction of the
 * postselected top-left block, and success-probability evaluation.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lapbe/circuit.hpp"
#include "lapbe/encoder.hpp"

namespace lapbe {

using Complex = std::complex<double>;

struct StateVector {
  std::uint32_t n_qubits = 0;
  std::vector<Complex> amplitudes;

  static StateVector zero(std::uint32_t n_qubits);
  static StateVector basis(std::uint32_t n_qubits, std::uint64_t index);
  double norm() const;
};

struct SimOptions {
  /// Use the OpenMP amplitude kernels (bitwise identical to serial).
  bool parallel = true;
  /// Statevector cap in qubits; exceeding it raises ResourceLimitError.
  std::uint32_t max_qubits = 20;
};

void apply_gate(StateVector& state, const Gate& g, const SimOptions& opts = {});
void run(const Circuit& c, StateVector& state, const SimOptions& opts = {});

/// Dense real matrix extracted by ancilla postselection.
struct BlockMatrix {
  std::uint64_t dim = 0;
  std::vector<double> data;  // row-major

  double at(std::uint64_t row, std::uint64_t col) const {
    return data[row * dim + col];
  }
};

/// Column j of the block is the ancilla-|0...0> component of the output on
/// basis input |0...0>|j>. Columns are computed independently (and in
/// parallel), never materializing the full unitary; imaginary parts are
/// checked against 1e-12 and discarded.
BlockMatrix extract_block(const EncodingDescriptor& desc,
                          const SimOptions& opts = {});

/// Probability that measuring every ancilla yields 0...0 for the normalized
/// system input v; equals ||L~ v||^2 for the exact encodings.
double success_probability(const EncodingDescriptor& desc,
                           const std::vector<double>& v,
                           const SimOptions& opts = {});

/// Midpoint samples of sin(2 pi sum_d x_d) on the spec's grid, flattened in
/// axis order (axis 1 fastest) and normalized.
std::vector<double> test_state(const LaplacianSpec& spec);

}  // namespace lapbe
