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

#include "lapbe/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace lapbe {

namespace {
constexpr double kDropTolerance = 1e-15;
}

std::string bc_tag(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::Periodic: return "p";
    case BoundaryCondition::Dirichlet: return "d";
    case BoundaryCondition::Neumann: return "n";
  }
  return "?";
}

std::string bc_name(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::Periodic: return "periodic";
    case BoundaryCondition::Dirichlet: return "dirichlet";
    case BoundaryCondition::Neumann: return "neumann";
  }
  return "?";
}

BoundaryCondition parse_bc(const std::string& text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "p" || t == "periodic") return BoundaryCondition::Periodic;
  if (t == "d" || t == "dirichlet") return BoundaryCondition::Dirichlet;
  if (t == "n" || t == "neumann") return BoundaryCondition::Neumann;
  throw SpecificationError("unknown boundary condition: '" + text + "'");
}

int LaplacianSpec::total_qubits() const {
  int n = 0;
  for (const auto& axis : axes) n += axis.n_qubits;
  return n;
}

std::uint64_t LaplacianSpec::total_points() const {
  std::uint64_t n = 1;
  for (const auto& axis : axes) n <<= axis.n_qubits;
  return n;
}

void LaplacianSpec::validate() const {
  if (axes.empty()) throw SpecificationError("at least one axis is required");
  for (const auto& axis : axes) {
    if (axis.n_qubits < 1)
      throw SpecificationError("axis qubit count must be >= 1");
    if (!(axis.spacing > 0.0) || !std::isfinite(axis.spacing))
      throw SpecificationError("axis spacing must be positive and finite");
  }
}

SparseMatrix SparseMatrix::from_triplets(std::uint64_t dim,
                                         std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= dim || t.col >= dim)
      throw SpecificationError("sparse entry out of range");
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  SparseMatrix m;
  m.dim_ = dim;
  for (const auto& t : triplets) {
    if (!m.entries_.empty() && m.entries_.back().row == t.row &&
        m.entries_.back().col == t.col) {
      m.entries_.back().value += t.value;
    } else {
      m.entries_.push_back(t);
    }
  }
  std::erase_if(m.entries_, [](const Triplet& t) {
    return std::abs(t.value) < kDropTolerance;
  });
  return m;
}

double SparseMatrix::at(std::uint64_t row, std::uint64_t col) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::pair{row, col},
      [](const Triplet& t, const std::pair<std::uint64_t, std::uint64_t>& k) {
        return t.row != k.first ? t.row < k.first : t.col < k.second;
      });
  if (it != entries_.end() && it->row == row && it->col == col)
    return it->value;
  return 0.0;
}

SparseMatrix SparseMatrix::scaled(double factor) const {
  std::vector<Triplet> t = entries_;
  for (auto& e : t) e.value *= factor;
  return from_triplets(dim_, std::move(t));
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(dim_, std::move(t));
}

std::vector<double> SparseMatrix::to_dense(std::uint64_t max_entries) const {
  if (dim_ != 0 && dim_ > max_entries / dim_)
    throw ResourceLimitError("dense conversion exceeds the entry cap");
  std::vector<double> d(dim_ * dim_, 0.0);
  for (const auto& e : entries_) d[e.row * dim_ + e.col] += e.value;
  return d;
}

std::vector<double> SparseMatrix::apply(const std::vector<double>& x) const {
  if (x.size() != dim_)
    throw SpecificationError("matrix-vector size mismatch");
  std::vector<double> y(dim_, 0.0);
  for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
  return y;
}

SparseMatrix build_1d(BoundaryCondition bc, int n_qubits, double spacing) {
  if (n_qubits < 1) throw SpecificationError("n_qubits must be >= 1");
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw SpecificationError("spacing must be positive and finite");

  const std::uint64_t n = 1ull << n_qubits;
  const double inv_h2 = 1.0 / (spacing * spacing);
  std::vector<SparseMatrix::Triplet> t;
  for (std::uint64_t j = 0; j < n; ++j) {
    t.push_back({j, j, -2.0 * inv_h2});
    if (j > 0) t.push_back({j, j - 1, inv_h2});
    if (j + 1 < n) t.push_back({j, j + 1, inv_h2});
  }
  switch (bc) {
    case BoundaryCondition::Periodic:
      // For N = 2 both wrap couplings hit the same entry and are summed.
      t.push_back({0, n - 1, inv_h2});
      t.push_back({n - 1, 0, inv_h2});
      break;
    case BoundaryCondition::Dirichlet:
      break;
    case BoundaryCondition::Neumann:
      t.push_back({0, 0, inv_h2});
      t.push_back({n - 1, n - 1, inv_h2});
      break;
  }
  return SparseMatrix::from_triplets(n, std::move(t));
}

SparseMatrix build_scaled_1d(BoundaryCondition bc, int n_qubits) {
  return build_1d(bc, n_qubits, 1.0).scaled(0.25);
}

std::vector<double> weights(const LaplacianSpec& spec) {
  spec.validate();
  double total = 0.0;
  std::vector<double> w;
  w.reserve(spec.axes.size());
  for (const auto& axis : spec.axes) {
    const double inv_h2 = 1.0 / (axis.spacing * axis.spacing);
    w.push_back(inv_h2);
    total += inv_h2;
  }
  for (double& v : w) v /= total;
  return w;
}

SparseMatrix build_scaled_nd(const LaplacianSpec& spec,
                             std::uint64_t max_dim) {
  spec.validate();
  if (spec.total_qubits() >= 63 || spec.total_points() > max_dim)
    throw ResourceLimitError("matrix dimension exceeds the configured cap");

  const auto w = weights(spec);
  const std::uint64_t dim = spec.total_points();
  std::vector<SparseMatrix::Triplet> t;
  std::uint64_t stride_low = 1;
  for (std::size_t d = 0; d < spec.axes.size(); ++d) {
    const std::uint64_t nd = 1ull << spec.axes[d].n_qubits;
    const SparseMatrix axis_op = build_scaled_1d(spec.axes[d].bc,
                                                 spec.axes[d].n_qubits);
    const std::uint64_t n_high = dim / (stride_low * nd);
    for (std::uint64_t high = 0; high < n_high; ++high) {
      for (const auto& e : axis_op.entries()) {
        const std::uint64_t row_base = (high * nd + e.row) * stride_low;
        const std::uint64_t col_base = (high * nd + e.col) * stride_low;
        for (std::uint64_t low = 0; low < stride_low; ++low) {
          t.push_back({row_base + low, col_base + low, w[d] * e.value});
        }
      }
    }
    stride_low *= nd;
  }
  return SparseMatrix::from_triplets(dim, std::move(t));
}

namespace {

// Largest |eigenvalue| of a symmetric dense matrix by cyclic Jacobi sweeps.
double jacobi_spectral_radius(std::vector<double> a, std::uint64_t n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::uint64_t p = 0; p < n; ++p)
      for (std::uint64_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off < 1e-30) break;
    for (std::uint64_t p = 0; p < n; ++p) {
      for (std::uint64_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-18) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (std::uint64_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::uint64_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  double r = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) r = std::max(r, std::abs(a[i * n + i]));
  return r;
}

}  // namespace

double spectral_norm_bound(const SparseMatrix& m) {
  const std::uint64_t n = m.dim();
  if (n == 0) return 0.0;
  if (n <= 64) return jacobi_spectral_radius(m.to_dense(), n);
  std::vector<double> center(n, 0.0), radius(n, 0.0);
  for (const auto& e : m.entries()) {
    if (e.row == e.col)
      center[e.row] = e.value;
    else
      radius[e.row] += std::abs(e.value);
  }
  double bound = 0.0;
  for (std::uint64_t i = 0; i < n; ++i)
    bound = std::max(bound, std::abs(center[i]) + radius[i]);
  return bound;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_dense_csv(const SparseMatrix& m, std::ostream& out) {
  const auto d = m.to_dense();
  const std::uint64_t n = m.dim();
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t c = 0; c < n; ++c) {
      if (c != 0) out << ',';
      out << format_double(d[r * n + c]);
    }
    out << '\n';
  }
}

void write_coords(const SparseMatrix& m, std::ostream& out) {
  for (const auto& e : m.entries())
    out << e.row << ' ' << e.col << ' ' << format_double(e.value) << '\n';
}

}  // namespace lapbe
