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
 * Classical construction of discrete Laplacian matrices. These matrices are
 * the ground-truth oracle against which every synthesized circuit is checked.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lapbe/errors.hpp"

namespace lapbe {

enum class BoundaryCondition { Periodic, Dirichlet, Neumann };

/// Short tag used in reports and file output: "p", "d" or "n".
std::string bc_tag(BoundaryCondition bc);
std::string bc_name(BoundaryCondition bc);

/// Parses "periodic"/"dirichlet"/"neumann" (case-insensitive) or "p"/"d"/"n".
BoundaryCondition parse_bc(const std::string& text);

/// One coordinate axis of the computational grid: 2^n_qubits points with
/// uniform spacing and a boundary condition.
struct GridAxisSpec {
  int n_qubits = 1;
  double spacing = 1.0;
  BoundaryCondition bc = BoundaryCondition::Periodic;
};

/// The full problem definition; axis 1 first and fastest-varying.
struct LaplacianSpec {
  std::vector<GridAxisSpec> axes;

  int dimension() const { return static_cast<int>(axes.size()); }
  int total_qubits() const;
  std::uint64_t total_points() const;
  void validate() const;
};

/// Symmetric sparse matrix in normalized coordinate form: entries sorted by
/// (row, col), duplicates summed, entries below 1e-15 in magnitude dropped.
class SparseMatrix {
 public:
  struct Triplet {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    double value = 0.0;
  };

  SparseMatrix() = default;
  static SparseMatrix from_triplets(std::uint64_t dim,
                                    std::vector<Triplet> triplets);

  std::uint64_t dim() const { return dim_; }
  const std::vector<Triplet>& entries() const { return entries_; }

  double at(std::uint64_t row, std::uint64_t col) const;
  SparseMatrix scaled(double factor) const;
  SparseMatrix transposed() const;

  /// Dense row-major conversion; guarded by an entry-count cap.
  std::vector<double> to_dense(std::uint64_t max_entries = kDenseCap) const;

  /// y = A x
  std::vector<double> apply(const std::vector<double>& x) const;

  static constexpr std::uint64_t kDenseCap = 1ull << 20;

 private:
  std::uint64_t dim_ = 0;
  std::vector<Triplet> entries_;
};

/// N x N one-dimensional Laplacian with the (1, -2, 1)/h^2 interior stencil
/// and boundary rows fixed by the boundary condition. For periodic N = 2 the
/// two wrap couplings land on the same entry and are summed.
SparseMatrix build_1d(BoundaryCondition bc, int n_qubits, double spacing);

/// Scaled operator (h^2/4) L; spacing-independent, spectral norm <= 1.
SparseMatrix build_scaled_1d(BoundaryCondition bc, int n_qubits);

/// Per-axis weights w_d = (1/h_d^2) / sum_i (1/h_i^2); they sum to 1.
std::vector<double> weights(const LaplacianSpec& spec);

/// Scaled D-dimensional operator: the weighted Kronecker sum of the scaled
/// 1D operators, axis 1 occupying the fastest-varying index block.
SparseMatrix build_scaled_nd(const LaplacianSpec& spec,
                             std::uint64_t max_dim = 1ull << 20);

/// Upper bound on the spectral norm via Gershgorin discs; for dim <= 64 the
/// exact largest |eigenvalue| from a dense Jacobi diagonalization.
double spectral_norm_bound(const SparseMatrix& m);

/// Dense CSV export, row-major, one matrix row per line, %.17g values.
void write_dense_csv(const SparseMatrix& m, std::ostream& out);

/// Coordinate-triplet export: "row col value" per line, sorted by (row, col).
void write_coords(const SparseMatrix& m, std::ostream& out);

/// Fixed-format double used by every text export ("%.17g").
std::string format_double(double v);

}  // namespace lapbe
