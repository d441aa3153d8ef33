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
 * Clifford+T resource estimation: closed-form counts for the encoder's
 * circuit families and an empirical lowering pass over actual IR.
 *
 * Cost model: every T gate originates from a Toffoli (7 T each). Multi-
 * controlled X with m >= 2 controls lowers to 2m-3 Toffolis given two clean
 * ancillas; a single-controlled X is Clifford. Incrementers cost 3n Toffolis
 * (at most 5 ancillas); under c extra controls each Toffoli becomes a
 * (c+2)-controlled X. RY rotations are reported separately, not synthesized.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapbe/circuit.hpp"
#include "lapbe/lattice.hpp"

namespace lapbe {

struct ResourceReport {
  std::uint64_t ir_gate_count = 0;
  std::uint64_t toffoli_count = 0;
  std::uint64_t t_count = 0;
  std::uint64_t rotation_count = 0;
  int clean_ancillas_assumed = 0;

  struct Component {
    std::string label;
    std::uint64_t toffoli = 0;
    std::uint64_t t = 0;
  };
  std::vector<Component> breakdown;
};

/// Toffolis for an m-controlled X: 0 for m < 2 (a literal CX or X), else
/// 2m - 3.
std::uint64_t mcx_toffoli_count(int m_controls);

/// Toffolis for a +-1 (mod 2^n) incrementer: 3n uncontrolled; with c extra
/// controls each Toffoli becomes a (c+2)-controlled X.
std::uint64_t incrementer_toffoli_count(int n_qubits, int extra_controls);

/// Closed-form 1D totals: periodic 42n T, Dirichlet (28n+14) + 42n,
/// Neumann (56n+28) + 42n.
ResourceReport estimate_1d(BoundaryCondition bc, int n_qubits);

/// Closed-form D-dimensional totals with d = ceil(log2 D) selector controls
/// per operation; D = 1 reduces exactly to estimate_1d.
ResourceReport estimate_nd(const LaplacianSpec& spec);

/// Walks the IR, classifies controlled operations (comparator MCX / shift /
/// rotation / other Clifford) and applies the counting rules. Never exceeds
/// the matching symbolic estimate.
ResourceReport lower_and_count(const Circuit& c);

std::string report_to_json(const ResourceReport& r);

}  // namespace lapbe
