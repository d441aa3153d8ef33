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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lapbe/circuit.hpp"
#include "lapbe/encoder.hpp"
#include "lapbe/qasm.hpp"
#include "lapbe/simulator.hpp"

using namespace lapbe;

namespace {

RegisterLayout small_layout() {
  RegisterLayout layout;
  layout.add("j", 2);
  layout.add("l", 2);
  return layout;
}

bool structurally_equal(const Gate& a, const Gate& b);

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.gates().size() != b.gates().size()) return false;
  for (std::size_t i = 0; i < a.gates().size(); ++i)
    if (!structurally_equal(a.gates()[i], b.gates()[i])) return false;
  return true;
}

bool structurally_equal(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.target != b.target || a.angle != b.angle)
    return false;
  if (a.controls.size() != b.controls.size()) return false;
  for (std::size_t i = 0; i < a.controls.size(); ++i)
    if (a.controls[i].qubit != b.controls[i].qubit ||
        a.controls[i].polarity != b.controls[i].polarity)
      return false;
  if (static_cast<bool>(a.sub) != static_cast<bool>(b.sub)) return false;
  if (a.sub && !structurally_equal(*a.sub, *b.sub)) return false;
  return true;
}

}  // namespace

TEST_CASE("append preserves order and validates") {
  Circuit c(small_layout());
  c.append(Gate::h(c.layout().index("l", 0)));
  CHECK(c.gates().size() == 1);
  c.append(Gate::x(0));
  CHECK(c.gates()[0].kind == Gate::Kind::H);
  CHECK(c.gates()[1].kind == Gate::Kind::X);

  CHECK_THROWS_AS(c.append(Gate::x(99)), StructuralError);
  CHECK_THROWS_AS(c.append(Gate::controlled_x({{1, Polarity::Closed}}, 1)),
                  StructuralError);
  CHECK_THROWS_AS(
      c.append(Gate::controlled_x(
          {{1, Polarity::Closed}, {1, Polarity::Open}}, 0)),
      StructuralError);
  CHECK_THROWS_AS(c.append(Gate::ry(0, std::nan(""))), StructuralError);
}

TEST_CASE("inverse is an involution and negates rotations") {
  Circuit c(small_layout());
  c.append(Gate::h(0));
  c.append(Gate::ry(1, 0.7));
  c.append(Gate::controlled_x({{0, Polarity::Open}}, 2));

  const Circuit inv = inverse(c);
  CHECK(inv.gates()[0].kind == Gate::Kind::Controlled);
  CHECK(inv.gates()[1].angle == -0.7);
  CHECK(structurally_equal(inverse(inv), c));
}

TEST_CASE("circuit composed with its inverse is the identity") {
  const auto desc = build_1d(BoundaryCondition::Neumann, 3);
  const Circuit inv = inverse(desc.circuit);
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::uint64_t> basis(
      0, (1ull << desc.circuit.n_qubits()) - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t idx = basis(rng);
    StateVector sv = StateVector::basis(desc.circuit.n_qubits(), idx);
    run(desc.circuit, sv);
    run(inv, sv);
    for (std::uint64_t i = 0; i < sv.amplitudes.size(); ++i) {
      const double expected = i == idx ? 1.0 : 0.0;
      CHECK(std::abs(sv.amplitudes[i].real() - expected) <= 1e-12);
      CHECK(std::abs(sv.amplitudes[i].imag()) <= 1e-12);
    }
  }
}

TEST_CASE("with_controls") {
  RegisterLayout layout;
  layout.add("j", 1);
  layout.add("a", 1);
  Circuit c(layout);
  c.append(Gate::x(0));

  const Control extra{1, Polarity::Closed};
  const Circuit wrapped = with_controls(c, std::span{&extra, 1});
  CHECK(wrapped.gates()[0].kind == Gate::Kind::Controlled);
  CHECK(wrapped.gates()[0].controls.size() == 1);

  CHECK(structurally_equal(with_controls(c, {}), c));

  Circuit h(layout);
  h.append(Gate::h(0));
  CHECK_THROWS_AS(with_controls(h, std::span{&extra, 1}), StructuralError);

  // extra controls must not touch qubits the circuit acts on
  const Control overlapping{0, Polarity::Closed};
  CHECK_THROWS_AS(with_controls(c, std::span{&overlapping, 1}),
                  StructuralError);
}

TEST_CASE("with_controls reproduces the selector-controlled shift") {
  // Wrapping S+ with a control behaves exactly like the builder's
  // controlled shift, checked on the full statevector.
  RegisterLayout layout;
  layout.add("j", 2);
  layout.add("k", 1);
  Circuit base(layout);
  Circuit shift = build_shift(2, ShiftDirection::Plus);
  for (const Gate& g : shift.gates()) base.append(g);
  const Control sel{2, Polarity::Closed};
  const Circuit wrapped = with_controls(base, std::span{&sel, 1});

  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    StateVector sv = StateVector::basis(3, idx);
    run(wrapped, sv);
    const std::uint64_t j = idx & 3, k = idx >> 2;
    const std::uint64_t expect = k ? ((j + 1) % 4) | (k << 2) : idx;
    CHECK(std::abs(sv.amplitudes[expect].real() - 1.0) <= 1e-14);
  }
}

TEST_CASE("metrics") {
  Circuit empty(small_layout());
  auto m = empty.metrics();
  CHECK(m.gate_count == 0);
  CHECK(m.two_plus_qubit_count == 0);
  CHECK(m.depth == 0);

  Circuit parallel(small_layout());
  parallel.append(Gate::h(2));
  parallel.append(Gate::h(3));
  CHECK(parallel.metrics().depth == 1);

  Circuit serial(small_layout());
  serial.append(Gate::h(2));
  serial.append(Gate::z(2));
  CHECK(serial.metrics().depth == 2);
  CHECK(serial.metrics().depth <= serial.metrics().gate_count);
}

TEST_CASE("qasm export") {
  const auto desc = build_1d(BoundaryCondition::Dirichlet, 2);
  const std::string qasm = to_qasm3(desc.circuit);
  CHECK(qasm.find("OPENQASM 3.0;") == 0);
  CHECK(qasm.find("qubit[2] j;") != std::string::npos);
  CHECK(qasm.find("qubit[2] l;") != std::string::npos);
  CHECK(qasm.find("qubit[1] del;") != std::string::npos);
  CHECK(qasm.find("h l[0];") != std::string::npos);
  // comparator for j = 0: all-open controls flagged with negctrl
  CHECK(qasm.find("negctrl @ negctrl @ negctrl @ negctrl @ x j[0], j[1], "
                  "l[0], l[1], del[0];") != std::string::npos);
  // identical circuits export identically
  CHECK(qasm == to_qasm3(build_1d(BoundaryCondition::Dirichlet, 2).circuit));
}
