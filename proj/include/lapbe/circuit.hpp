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
 * Gate-level circuit IR with named registers, open/closed controls and
 * controlled subcircuits. Circuits are immutable values after construction;
 * builders return new circuits.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapbe/errors.hpp"

namespace lapbe {

enum class Polarity { Open, Closed };

struct Control {
  std::uint32_t qubit = 0;
  Polarity polarity = Polarity::Closed;
};

/// Classification hint for the resource-lowering pass.
enum class GateRole { None, Comparator, Shift, Prep };

class Circuit;

struct Gate {
  enum class Kind { H, X, Z, RY, Controlled };
  enum class TargetOp { X, RY, Sub };

  Kind kind = Kind::H;
  std::uint32_t target = 0;  // unused when target_op == Sub
  double angle = 0.0;        // RY only
  std::vector<Control> controls;            // Controlled only
  TargetOp target_op = TargetOp::X;         // Controlled only
  std::shared_ptr<const Circuit> sub;       // Controlled + Sub only
  GateRole role = GateRole::None;

  static Gate h(std::uint32_t q);
  static Gate x(std::uint32_t q);
  static Gate z(std::uint32_t q);
  static Gate ry(std::uint32_t q, double angle);
  static Gate controlled_x(std::vector<Control> controls, std::uint32_t target,
                           GateRole role = GateRole::None);
  static Gate controlled_ry(std::vector<Control> controls, std::uint32_t target,
                            double angle, GateRole role = GateRole::None);
  static Gate controlled_sub(std::vector<Control> controls,
                             std::shared_ptr<const Circuit> sub,
                             GateRole role = GateRole::None);

  /// Qubits the underlying (uncontrolled) operation acts on.
  std::vector<std::uint32_t> target_qubits() const;
  /// All qubits touched, controls included.
  std::vector<std::uint32_t> qubits() const;

  Gate adjoint() const;
};

/// Named, contiguously packed qubit registers. Local index 0 of a register is
/// the least significant bit of the value it encodes; registers added first
/// occupy the least significant global indices.
class RegisterLayout {
 public:
  struct Register {
    std::string name;
    std::uint32_t size = 0;
    std::uint32_t offset = 0;
  };

  void add(std::string name, std::uint32_t size);
  bool has(std::string_view name) const;
  std::uint32_t index(std::string_view name, std::uint32_t local) const;
  std::uint32_t size(std::string_view name) const;
  std::uint32_t total_qubits() const { return total_; }
  const std::vector<Register>& registers() const { return registers_; }

  /// Register/local pair owning a global index, e.g. for QASM naming.
  std::pair<std::string_view, std::uint32_t> locate(std::uint32_t global) const;

 private:
  std::vector<Register> registers_;
  std::uint32_t total_ = 0;
};

struct CircuitMetrics {
  std::uint64_t gate_count = 0;
  std::uint64_t two_plus_qubit_count = 0;
  std::uint64_t depth = 0;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

  const RegisterLayout& layout() const { return layout_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::uint32_t n_qubits() const { return layout_.total_qubits(); }

  /// Validates and appends; time order is left to right.
  void append(Gate g);

  CircuitMetrics metrics() const;

 private:
  RegisterLayout layout_;
  std::vector<Gate> gates_;
};

/// Reversed gate order with each gate replaced by its adjoint.
Circuit inverse(const Circuit& c);

/// Every gate gains the extra controls. The extra qubits must be disjoint
/// from every qubit the circuit's gates touch. Controlled H is rejected.
Circuit with_controls(const Circuit& c, std::span<const Control> extra);

}  // namespace lapbe
