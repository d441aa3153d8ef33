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

#include "lapbe/qasm.hpp"

#include <ostream>
#include <sstream>

#include "lapbe/lattice.hpp"

namespace lapbe {

namespace {

std::string qubit_name(const RegisterLayout& layout, std::uint32_t global) {
  const auto [name, local] = layout.locate(global);
  std::ostringstream os;
  os << name << '[' << local << ']';
  return os.str();
}

void emit_gate(const Circuit& root, const Gate& g,
               const std::vector<Control>& outer, std::ostream& out) {
  if (g.kind == Gate::Kind::Controlled && g.target_op == Gate::TargetOp::Sub) {
    std::vector<Control> merged = outer;
    merged.insert(merged.end(), g.controls.begin(), g.controls.end());
    for (const Gate& inner : g.sub->gates()) emit_gate(root, inner, merged, out);
    return;
  }

  std::vector<Control> controls = outer;
  std::string base;
  switch (g.kind) {
    case Gate::Kind::H:
      if (!controls.empty())
        throw StructuralError("controlled H is not supported");
      base = "h";
      break;
    case Gate::Kind::X:
      base = "x";
      break;
    case Gate::Kind::Z:
      base = "z";
      break;
    case Gate::Kind::RY:
      base = "ry(" + format_double(g.angle) + ")";
      break;
    case Gate::Kind::Controlled:
      controls.insert(controls.end(), g.controls.begin(), g.controls.end());
      base = g.target_op == Gate::TargetOp::X
                 ? "x"
                 : "ry(" + format_double(g.angle) + ")";
      break;
  }

  for (const Control& c : controls)
    out << (c.polarity == Polarity::Closed ? "ctrl @ " : "negctrl @ ");
  out << base;
  bool first = true;
  for (const Control& c : controls) {
    out << (first ? " " : ", ") << qubit_name(root.layout(), c.qubit);
    first = false;
  }
  out << (first ? " " : ", ") << qubit_name(root.layout(), g.target) << ";\n";
}

}  // namespace

void write_qasm3(const Circuit& c, std::ostream& out) {
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  for (const auto& reg : c.layout().registers()) {
    if (reg.size == 0) continue;
    out << "qubit[" << reg.size << "] " << reg.name << ";\n";
  }
  for (const Gate& g : c.gates()) emit_gate(c, g, {}, out);
}

std::string to_qasm3(const Circuit& c) {
  std::ostringstream os;
  write_qasm3(c, os);
  return os.str();
}

}  // namespace lapbe
