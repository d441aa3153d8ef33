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

#pragma once

#include <iosfwd>
#include <string>

#include "lapbe/circuit.hpp"

namespace lapbe {

/// OpenQASM 3 text export: qubit array declarations, h/x/z/ry gates and
/// `ctrl @` / `negctrl @` modifiers, one gate per line, deterministic order.
/// Controlled subcircuits are flattened with their controls distributed.
void write_qasm3(const Circuit& c, std::ostream& out);

std::string to_qasm3(const Circuit& c);

}  // namespace lapbe
