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

#include "lapbe/simulator.hpp"

#include <cmath>
#include <numbers>

#include "lapbe/kernels.hpp"

namespace lapbe {

namespace kernels {

void apply_1q_serial(Complex* amps, std::uint64_t n_amps, std::uint32_t target,
                     const Complex u[4], std::uint64_t control_mask,
                     std::uint64_t control_value) {
  const std::uint64_t bit = 1ull << target;
  for (std::uint64_t i = 0; i < n_amps; ++i) {
    if (i & bit) continue;
    if ((i & control_mask) != control_value) continue;
    apply_pair(amps[i], amps[i | bit], u);
  }
}

void apply_1q_parallel(Complex* amps, std::uint64_t n_amps,
                       std::uint32_t target, const Complex u[4],
                       std::uint64_t control_mask,
                       std::uint64_t control_value) {
  const std::uint64_t bit = 1ull << target;
  const std::int64_t n = static_cast<std::int64_t>(n_amps);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t idx = static_cast<std::uint64_t>(i);
    if (idx & bit) continue;
    if ((idx & control_mask) != control_value) continue;
    apply_pair(amps[idx], amps[idx | bit], u);
  }
}

}  // namespace kernels

StateVector StateVector::zero(std::uint32_t n_qubits) {
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(1ull << n_qubits, Complex{0.0, 0.0});
  return s;
}

StateVector StateVector::basis(std::uint32_t n_qubits, std::uint64_t index) {
  StateVector s = zero(n_qubits);
  s.amplitudes.at(index) = Complex{1.0, 0.0};
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

namespace {

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;

  void add(const Control& c) {
    const std::uint64_t bit = 1ull << c.qubit;
    mask |= bit;
    if (c.polarity == Polarity::Closed) value |= bit;
  }
};

void single_qubit_matrix(const Gate& g, Complex u[4]) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (g.kind == Gate::Kind::Controlled
              ? (g.target_op == Gate::TargetOp::X ? Gate::Kind::X
                                                  : Gate::Kind::RY)
              : g.kind) {
    case Gate::Kind::H:
      u[0] = u[1] = u[2] = inv_sqrt2;
      u[3] = -inv_sqrt2;
      break;
    case Gate::Kind::X:
      u[0] = u[3] = 0.0;
      u[1] = u[2] = 1.0;
      break;
    case Gate::Kind::Z:
      u[0] = 1.0;
      u[1] = u[2] = 0.0;
      u[3] = -1.0;
      break;
    case Gate::Kind::RY: {
      const double c = std::cos(g.angle / 2.0);
      const double s = std::sin(g.angle / 2.0);
      u[0] = c;
      u[1] = -s;
      u[2] = s;
      u[3] = c;
      break;
    }
    default:
      throw StructuralError("gate has no single-qubit matrix");
  }
}

void apply_with_controls(StateVector& state, const Gate& g,
                         ControlMask outer, const SimOptions& opts) {
  if (g.kind == Gate::Kind::Controlled) {
    for (const Control& c : g.controls) outer.add(c);
    if (g.target_op == Gate::TargetOp::Sub) {
      for (const Gate& inner : g.sub->gates()) {
        if (inner.kind == Gate::Kind::H && outer.mask != 0)
          throw StructuralError("controlled H is not supported");
        apply_with_controls(state, inner, outer, opts);
      }
      return;
    }
  } else if (g.kind == Gate::Kind::H && outer.mask != 0) {
    throw StructuralError("controlled H is not supported");
  }

  Complex u[4];
  single_qubit_matrix(g, u);
  const std::uint64_t n_amps = state.amplitudes.size();
  if (opts.parallel) {
    kernels::apply_1q_parallel(state.amplitudes.data(), n_amps, g.target, u,
                               outer.mask, outer.value);
  } else {
    kernels::apply_1q_serial(state.amplitudes.data(), n_amps, g.target, u,
                             outer.mask, outer.value);
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& g, const SimOptions& opts) {
  apply_with_controls(state, g, {}, opts);
}

void run(const Circuit& c, StateVector& state, const SimOptions& opts) {
  if (state.amplitudes.size() != (1ull << c.n_qubits()))
    throw SpecificationError("state size does not match circuit qubit count");
  for (const Gate& g : c.gates()) apply_gate(state, g, opts);
}

BlockMatrix extract_block(const EncodingDescriptor& desc,
                          const SimOptions& opts) {
  const std::uint32_t q_total = desc.circuit.n_qubits();
  if (q_total > opts.max_qubits)
    throw ResourceLimitError("circuit exceeds the simulation qubit cap");
  const std::uint64_t dim = 1ull << desc.system_qubits;

  BlockMatrix block;
  block.dim = dim;
  block.data.assign(dim * dim, 0.0);

  double max_imag = 0.0;
  bool failed = false;

  // Columns are independent; per-column simulation stays serial so the
  // result is bitwise independent of the parallelism degree.
  const std::int64_t n_cols = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static) if (opts.parallel) \
    reduction(max : max_imag) reduction(|| : failed)
  for (std::int64_t col = 0; col < n_cols; ++col) {
    try {
      StateVector sv = StateVector::basis(q_total,
                                          static_cast<std::uint64_t>(col));
      SimOptions serial = opts;
      serial.parallel = false;
      run(desc.circuit, sv, serial);
      for (std::uint64_t row = 0; row < dim; ++row) {
        const Complex a = sv.amplitudes[row];
        max_imag = std::max(max_imag, std::abs(a.imag()));
        block.data[row * dim + static_cast<std::uint64_t>(col)] = a.real();
      }
    } catch (...) {
      failed = true;
    }
  }
  if (failed) throw StructuralError("block extraction failed");
  if (max_imag > 1e-12)
    throw StructuralError("extracted block has non-negligible imaginary part");
  return block;
}

double success_probability(const EncodingDescriptor& desc,
                           const std::vector<double>& v,
                           const SimOptions& opts) {
  const std::uint32_t q_total = desc.circuit.n_qubits();
  if (q_total > opts.max_qubits)
    throw ResourceLimitError("circuit exceeds the simulation qubit cap");
  const std::uint64_t dim = 1ull << desc.system_qubits;
  if (v.size() != dim)
    throw SpecificationError("input vector does not match the grid size");
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw SpecificationError("input vector must be normalized");

  StateVector sv = StateVector::zero(q_total);
  for (std::uint64_t i = 0; i < dim; ++i) sv.amplitudes[i] = v[i];
  run(desc.circuit, sv, opts);

  double p = 0.0;  // serial sum: deterministic accumulation order
  for (std::uint64_t i = 0; i < dim; ++i) p += std::norm(sv.amplitudes[i]);
  return p;
}

std::vector<double> test_state(const LaplacianSpec& spec) {
  spec.validate();
  const std::uint64_t dim = spec.total_points();
  std::vector<double> v(dim, 0.0);
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    std::uint64_t rest = idx;
    double coord_sum = 0.0;
    for (const GridAxisSpec& axis : spec.axes) {
      const std::uint64_t nd = 1ull << axis.n_qubits;
      const std::uint64_t jd = rest % nd;
      rest /= nd;
      coord_sum += (static_cast<double>(jd) + 0.5) / static_cast<double>(nd);
    }
    v[idx] = std::sin(2.0 * std::numbers::pi * coord_sum);
  }
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 < 1e-24)
    throw DegenerateInputError("test state samples to the zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
  return v;
}

}  // namespace lapbe
