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

#include "lapbe/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace lapbe {

namespace {

int selector_qubits(int dimension) {
  int q = 0;
  while ((1 << q) < dimension) ++q;
  return q;
}

/// Ripple cascade on explicit global qubits, most significant target first.
/// Controls read the not-yet-flipped lower bits, so the order is load-bearing.
void append_shift_gates(Circuit& c, const std::vector<std::uint32_t>& j,
                        ShiftDirection direction) {
  const Polarity pol =
      direction == ShiftDirection::Plus ? Polarity::Closed : Polarity::Open;
  for (int t = static_cast<int>(j.size()) - 1; t >= 1; --t) {
    std::vector<Control> controls;
    for (int b = 0; b < t; ++b) controls.push_back({j[b], pol});
    c.append(Gate::controlled_x(std::move(controls), j[t]));
  }
  c.append(Gate::x(j[0]));
}

std::shared_ptr<const Circuit> make_shift_sub(
    const RegisterLayout& layout, const std::vector<std::uint32_t>& j,
    ShiftDirection direction) {
  auto sub = std::make_shared<Circuit>(layout);
  append_shift_gates(*sub, j, direction);
  return sub;
}

/// Comparator: multi-controlled X flagging grid value 0 (all open) or
/// N-1 (all closed) together with an l-register pattern, onto del.
Gate comparator(const std::vector<std::uint32_t>& j, bool flag_top,
                std::uint32_t l0, Polarity p0, std::uint32_t l1, Polarity p1,
                std::uint32_t del, std::vector<Control> selector) {
  std::vector<Control> controls = std::move(selector);
  const Polarity pj = flag_top ? Polarity::Closed : Polarity::Open;
  for (std::uint32_t q : j) controls.push_back({q, pj});
  controls.push_back({l0, p0});
  controls.push_back({l1, p1});
  return Gate::controlled_x(std::move(controls), del, GateRole::Comparator);
}

/// Boundary-flag block for one axis (empty for periodic), then the
/// controlled shifts. `selector` carries the k-equality controls (empty in
/// the 1D constructions).
void append_axis_block(Circuit& c, BoundaryCondition bc,
                       const std::vector<std::uint32_t>& j, std::uint32_t l0,
                       std::uint32_t l1, std::uint32_t del,
                       const std::vector<Control>& selector) {
  switch (bc) {
    case BoundaryCondition::Periodic:
      break;
    case BoundaryCondition::Dirichlet:
      c.append(comparator(j, false, l0, Polarity::Open, l1, Polarity::Open,
                          del, selector));
      c.append(comparator(j, true, l0, Polarity::Closed, l1, Polarity::Closed,
                          del, selector));
      break;
    case BoundaryCondition::Neumann:
      c.append(comparator(j, false, l0, Polarity::Open, l1, Polarity::Open,
                          del, selector));
      c.append(comparator(j, false, l0, Polarity::Closed, l1, Polarity::Open,
                          del, selector));
      c.append(comparator(j, true, l0, Polarity::Closed, l1, Polarity::Closed,
                          del, selector));
      c.append(comparator(j, true, l0, Polarity::Closed, l1, Polarity::Open,
                          del, selector));
      break;
  }

  std::vector<Control> minus_controls = selector;
  minus_controls.push_back({l1, Polarity::Open});
  c.append(Gate::controlled_sub(std::move(minus_controls),
                                make_shift_sub(c.layout(), j,
                                               ShiftDirection::Minus),
                                GateRole::Shift));
  std::vector<Control> plus_controls = selector;
  plus_controls.push_back({l0, Polarity::Closed});
  c.append(Gate::controlled_sub(std::move(plus_controls),
                                make_shift_sub(c.layout(), j,
                                               ShiftDirection::Plus),
                                GateRole::Shift));
}

std::vector<std::uint32_t> register_qubits(const RegisterLayout& layout,
                                           std::string_view name) {
  std::vector<std::uint32_t> qs;
  for (std::uint32_t i = 0; i < layout.size(name); ++i)
    qs.push_back(layout.index(name, i));
  return qs;
}

/// Appends src's gates with every qubit index shifted by `offset`.
void append_offset(Circuit& dst, const Circuit& src, std::uint32_t offset);

Gate offset_gate(const Circuit& dst, const Gate& g, std::uint32_t offset) {
  Gate out = g;
  out.target += offset;
  for (Control& c : out.controls) c.qubit += offset;
  if (g.kind == Gate::Kind::Controlled && g.target_op == Gate::TargetOp::Sub) {
    auto sub = std::make_shared<Circuit>(dst.layout());
    append_offset(*sub, *g.sub, offset);
    out.sub = sub;
    out.target = 0;
  }
  return out;
}

void append_offset(Circuit& dst, const Circuit& src, std::uint32_t offset) {
  for (const Gate& g : src.gates()) dst.append(offset_gate(dst, g, offset));
}

}  // namespace

Circuit build_shift(int n_qubits, ShiftDirection direction) {
  if (n_qubits < 1) throw SpecificationError("n_qubits must be >= 1");
  RegisterLayout layout;
  layout.add("j", static_cast<std::uint32_t>(n_qubits));
  Circuit c(layout);
  append_shift_gates(c, register_qubits(layout, "j"), direction);
  return c;
}

EncodingDescriptor build_1d(BoundaryCondition bc, int n_qubits) {
  if (n_qubits < 1) throw SpecificationError("n_qubits must be >= 1");
  RegisterLayout layout;
  layout.add("j", static_cast<std::uint32_t>(n_qubits));
  layout.add("l", 2);
  const bool has_del = bc != BoundaryCondition::Periodic;
  if (has_del) layout.add("del", 1);

  Circuit c(layout);
  const auto j = register_qubits(layout, "j");
  const std::uint32_t l0 = layout.index("l", 0);
  const std::uint32_t l1 = layout.index("l", 1);
  const std::uint32_t del = has_del ? layout.index("del", 0) : 0;

  c.append(Gate::h(l0));
  c.append(Gate::h(l1));
  c.append(Gate::z(l0));
  c.append(Gate::z(l1));
  append_axis_block(c, bc, j, l0, l1, del, {});
  c.append(Gate::h(l0));
  c.append(Gate::h(l1));

  EncodingDescriptor desc;
  desc.circuit = std::move(c);
  desc.alpha = 1.0;
  desc.ancilla_count = has_del ? 3 : 2;
  desc.system_qubits = n_qubits;
  desc.spec.axes = {{n_qubits, 1.0, bc}};
  return desc;
}

Circuit build_prep_k(const std::vector<double>& w) {
  const int dimension = static_cast<int>(w.size());
  if (dimension < 1) throw SpecificationError("at least one weight required");
  double total = 0.0;
  for (double v : w) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw SpecificationError("weights must be positive and finite");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw SpecificationError("weights must sum to 1");

  const int q = selector_qubits(dimension);
  RegisterLayout layout;
  layout.add("k", static_cast<std::uint32_t>(q));
  Circuit c(layout);
  if (q == 0) return c;

  // Padded weights; unused selector states carry zero mass, so no rotation
  // ever routes amplitude onto them.
  std::vector<double> mass(1ull << q, 0.0);
  std::copy(w.begin(), w.end(), mass.begin());

  // Rotation on bit t conditioned on the lower bits: the angle splits the
  // probability mass of the matching index class by the value of bit t.
  // For D <= 4 this is exactly the two-level tree with
  // theta0 = 2 arccos sqrt(w0 + w2), theta1 = 2 arccos sqrt(w0/(w0+w2)),
  // theta2 = 2 arccos sqrt(w1/(w1+w3)).
  for (int t = 0; t < q; ++t) {
    const std::uint64_t prefix_count = 1ull << t;
    for (std::uint64_t prefix = 0; prefix < prefix_count; ++prefix) {
      double m = 0.0, m_zero = 0.0;
      for (std::uint64_t v = 0; v < mass.size(); ++v) {
        if ((v & (prefix_count - 1)) != prefix) continue;
        m += mass[v];
        if (((v >> t) & 1ull) == 0) m_zero += mass[v];
      }
      if (m < 1e-15) continue;
      const double ratio = std::clamp(m_zero / m, 0.0, 1.0);
      const double theta = 2.0 * std::acos(std::sqrt(ratio));
      const std::uint32_t target = layout.index("k", t);
      if (t == 0) {
        c.append(Gate::ry(target, theta));
      } else {
        std::vector<Control> controls;
        for (int b = 0; b < t; ++b)
          controls.push_back({layout.index("k", b),
                              ((prefix >> b) & 1ull) ? Polarity::Closed
                                                     : Polarity::Open});
        c.append(Gate::controlled_ry(std::move(controls), target, theta,
                                     GateRole::Prep));
      }
    }
  }
  return c;
}

EncodingDescriptor build_nd(const LaplacianSpec& spec) {
  spec.validate();
  const int dimension = spec.dimension();
  if (dimension == 1) {
    EncodingDescriptor desc = build_1d(spec.axes[0].bc, spec.axes[0].n_qubits);
    desc.spec = spec;
    return desc;
  }

  const int q = selector_qubits(dimension);
  RegisterLayout layout;
  for (int d = 1; d <= dimension; ++d)
    layout.add("j" + std::to_string(d),
               static_cast<std::uint32_t>(spec.axes[d - 1].n_qubits));
  layout.add("l", 2);
  layout.add("del", 1);
  layout.add("k", static_cast<std::uint32_t>(q));

  Circuit c(layout);
  const std::uint32_t l0 = layout.index("l", 0);
  const std::uint32_t l1 = layout.index("l", 1);
  const std::uint32_t del = layout.index("del", 0);
  const std::uint32_t k_offset = layout.index("k", 0);

  const Circuit prep = build_prep_k(weights(spec));
  append_offset(c, prep, k_offset);
  c.append(Gate::h(l0));
  c.append(Gate::h(l1));
  c.append(Gate::z(l0));
  c.append(Gate::z(l1));

  for (int d = 1; d <= dimension; ++d) {
    // Selector equality k = d-1 as one control per selector bit.
    std::vector<Control> selector;
    for (int b = 0; b < q; ++b)
      selector.push_back({layout.index("k", b),
                          (((d - 1) >> b) & 1) ? Polarity::Closed
                                               : Polarity::Open});
    append_axis_block(c, spec.axes[d - 1].bc,
                      register_qubits(layout, "j" + std::to_string(d)), l0, l1,
                      del, selector);
  }

  c.append(Gate::h(l0));
  c.append(Gate::h(l1));
  append_offset(c, inverse(prep), k_offset);

  EncodingDescriptor desc;
  desc.circuit = std::move(c);
  desc.alpha = 1.0;
  desc.ancilla_count = 3 + q;
  desc.system_qubits = spec.total_qubits();
  desc.spec = spec;
  return desc;
}

}  // namespace lapbe
