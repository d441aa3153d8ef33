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
 * Builders for exact block-encoding circuits of scaled discrete Laplacians
 * with per-axis boundary conditions and grid sizes.
 *
 * Register layout, least significant first: j1..jD (grid coordinates, axis 1
 * fastest-varying), l (2 qubits), del (boundary flag; absent for pure
 * periodic 1D), k (selector, ceil(log2 D) qubits; absent for D = 1).
 * Postselecting every ancilla register on |0...0> applies the scaled
 * Laplacian to the grid register.
 */

#pragma once

#include <vector>

#include "lapbe/circuit.hpp"
#include "lapbe/lattice.hpp"

namespace lapbe {

enum class ShiftDirection { Minus, Plus };

/// An exact (alpha, m, 0) block encoding plus the spec it encodes.
struct EncodingDescriptor {
  Circuit circuit;
  double alpha = 1.0;
  int ancilla_count = 0;
  int system_qubits = 0;
  LaplacianSpec spec;
};

/// Cyclic decrement/increment by one modulo 2^n on an n-qubit register,
/// as a ripple cascade of multi-controlled X gates, most significant
/// target first. The decrement is the incrementer with open controls.
Circuit build_shift(int n_qubits, ShiftDirection direction);

/// Exact (1, m, 0) block encoding of the scaled 1D Laplacian;
/// m = 2 for periodic, m = 3 otherwise.
EncodingDescriptor build_1d(BoundaryCondition bc, int n_qubits);

/// Prepares sum_d sqrt(w_d) |d-1> on ceil(log2 D) qubits from |0...0>;
/// k0 is the least significant selector bit. Empty circuit for D = 1,
/// a single RY for D = 2, the two-level rotation tree for D in {3, 4},
/// and its binary-tree generalization beyond.
Circuit build_prep_k(const std::vector<double>& weights);

/// Exact (1, 3 + ceil(log2 D), 0) block encoding of the scaled
/// D-dimensional Laplacian; D = 1 delegates to build_1d.
EncodingDescriptor build_nd(const LaplacianSpec& spec);

}  // namespace lapbe
