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

#include "lapbe/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lapbe {

Gate Gate::h(std::uint32_t q) { return Gate{Kind::H, q}; }
Gate Gate::x(std::uint32_t q) { return Gate{Kind::X, q}; }
Gate Gate::z(std::uint32_t q) { return Gate{Kind::Z, q}; }

Gate Gate::ry(std::uint32_t q, double angle) {
  Gate g{Kind::RY, q};
  g.angle = angle;
  return g;
}

Gate Gate::controlled_x(std::vector<Control> controls, std::uint32_t target,
                        GateRole role) {
  Gate g{Kind::Controlled, target};
  g.controls = std::move(controls);
  g.target_op = TargetOp::X;
  g.role = role;
  return g;
}

Gate Gate::controlled_ry(std::vector<Control> controls, std::uint32_t target,
                         double angle, GateRole role) {
  Gate g{Kind::Controlled, target};
  g.controls = std::move(controls);
  g.target_op = TargetOp::RY;
  g.angle = angle;
  g.role = role;
  return g;
}

Gate Gate::controlled_sub(std::vector<Control> controls,
                          std::shared_ptr<const Circuit> sub, GateRole role) {
  Gate g{Kind::Controlled};
  g.controls = std::move(controls);
  g.target_op = TargetOp::Sub;
  g.sub = std::move(sub);
  g.role = role;
  return g;
}

std::vector<std::uint32_t> Gate::target_qubits() const {
  if (kind != Kind::Controlled || target_op != TargetOp::Sub)
    return {target};
  std::set<std::uint32_t> touched;
  for (const Gate& g : sub->gates())
    for (std::uint32_t q : g.qubits()) touched.insert(q);
  return {touched.begin(), touched.end()};
}

std::vector<std::uint32_t> Gate::qubits() const {
  std::vector<std::uint32_t> qs = target_qubits();
  if (kind == Kind::Controlled)
    for (const Control& c : controls) qs.push_back(c.qubit);
  return qs;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind) {
    case Kind::H:
    case Kind::X:
    case Kind::Z:
      break;
    case Kind::RY:
      g.angle = -angle;
      break;
    case Kind::Controlled:
      if (target_op == TargetOp::RY) {
        g.angle = -angle;
      } else if (target_op == TargetOp::Sub) {
        g.sub = std::make_shared<const Circuit>(inverse(*sub));
      }
      break;
  }
  return g;
}

void RegisterLayout::add(std::string name, std::uint32_t size) {
  if (has(name)) throw StructuralError("duplicate register '" + name + "'");
  registers_.push_back({std::move(name), size, total_});
  total_ += size;
}

bool RegisterLayout::has(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

std::uint32_t RegisterLayout::index(std::string_view name,
                                    std::uint32_t local) const {
  for (const Register& r : registers_) {
    if (r.name == name) {
      if (local >= r.size)
        throw StructuralError("local index out of range in register '" +
                              std::string(name) + "'");
      return r.offset + local;
    }
  }
  throw StructuralError("unknown register '" + std::string(name) + "'");
}

std::uint32_t RegisterLayout::size(std::string_view name) const {
  for (const Register& r : registers_)
    if (r.name == name) return r.size;
  throw StructuralError("unknown register '" + std::string(name) + "'");
}

std::pair<std::string_view, std::uint32_t> RegisterLayout::locate(
    std::uint32_t global) const {
  for (const Register& r : registers_) {
    if (global >= r.offset && global < r.offset + r.size)
      return {r.name, global - r.offset};
  }
  throw StructuralError("global qubit index out of range");
}

namespace {

void validate_gate(const Gate& g, std::uint32_t n_qubits) {
  for (std::uint32_t q : g.target_qubits())
    if (q >= n_qubits) throw StructuralError("gate target out of range");
  if (g.kind == Gate::Kind::Controlled) {
    std::set<std::uint32_t> cq;
    for (const Control& c : g.controls) {
      if (c.qubit >= n_qubits)
        throw StructuralError("control qubit out of range");
      if (!cq.insert(c.qubit).second)
        throw StructuralError("duplicate control qubit");
    }
    for (std::uint32_t q : g.target_qubits())
      if (cq.count(q))
        throw StructuralError("control set intersects target qubits");
    if (g.target_op == Gate::TargetOp::Sub && !g.sub)
      throw StructuralError("controlled subcircuit without a body");
  }
  if ((g.kind == Gate::Kind::RY ||
       (g.kind == Gate::Kind::Controlled &&
        g.target_op == Gate::TargetOp::RY)) &&
      !std::isfinite(g.angle))
    throw StructuralError("rotation angle must be finite");
}

}  // namespace

void Circuit::append(Gate g) {
  validate_gate(g, n_qubits());
  gates_.push_back(std::move(g));
}

CircuitMetrics Circuit::metrics() const {
  CircuitMetrics m;
  std::vector<std::uint64_t> qubit_depth(n_qubits(), 0);
  for (const Gate& g : gates_) {
    ++m.gate_count;
    const auto qs = g.qubits();
    if (qs.size() >= 2) ++m.two_plus_qubit_count;
    std::uint64_t level = 0;
    for (std::uint32_t q : qs) level = std::max(level, qubit_depth[q]);
    ++level;
    for (std::uint32_t q : qs) qubit_depth[q] = level;
    m.depth = std::max(m.depth, level);
  }
  return m;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.layout());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it)
    out.append(it->adjoint());
  return out;
}

Circuit with_controls(const Circuit& c, std::span<const Control> extra) {
  if (extra.empty()) return c;
  std::set<std::uint32_t> used;
  for (const Gate& g : c.gates())
    for (std::uint32_t q : g.qubits()) used.insert(q);
  for (const Control& e : extra)
    if (used.count(e.qubit))
      throw StructuralError("extra control overlaps circuit qubits");

  Circuit out(c.layout());
  for (const Gate& g : c.gates()) {
    Gate wrapped;
    switch (g.kind) {
      case Gate::Kind::H:
        throw StructuralError("controlled H is not supported");
      case Gate::Kind::X:
        wrapped = Gate::controlled_x({}, g.target, g.role);
        break;
      case Gate::Kind::Z: {
        // Z = closed-controlled phase flip on its own wire is not expressible
        // as controlled-X/RY; keep it as a subcircuit wrapper.
        auto body = std::make_shared<Circuit>(c.layout());
        body->append(Gate::z(g.target));
        wrapped = Gate::controlled_sub({}, body, g.role);
        break;
      }
      case Gate::Kind::RY:
        wrapped = Gate::controlled_ry({}, g.target, g.angle, g.role);
        break;
      case Gate::Kind::Controlled:
        wrapped = g;
        break;
    }
    for (const Control& e : extra) wrapped.controls.push_back(e);
    out.append(std::move(wrapped));
  }
  return out;
}

}  // namespace lapbe
