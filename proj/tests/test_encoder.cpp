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

#include "lapbe/encoder.hpp"
#include "lapbe/lattice.hpp"
#include "lapbe/simulator.hpp"

using namespace lapbe;

namespace {

// Permutation implemented by a circuit on computational basis states;
// requires the circuit to be a permutation (checked).
std::vector<std::uint64_t> permutation_of(const Circuit& c) {
  const std::uint64_t dim = 1ull << c.n_qubits();
  std::vector<std::uint64_t> perm(dim);
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    StateVector sv = StateVector::basis(c.n_qubits(), idx);
    run(c, sv);
    bool found = false;
    for (std::uint64_t out = 0; out < dim; ++out) {
      if (std::abs(sv.amplitudes[out] - Complex{1.0, 0.0}) < 1e-12) {
        perm[idx] = out;
        found = true;
      } else {
        REQUIRE(std::abs(sv.amplitudes[out]) < 1e-12);
      }
    }
    REQUIRE(found);
  }
  return perm;
}

void check_block_matches_oracle(const LaplacianSpec& spec, double tol) {
  const auto desc = build_nd(spec);
  const auto block = extract_block(desc);
  const auto oracle = build_scaled_nd(spec);
  REQUIRE(block.dim == oracle.dim());
  for (std::uint64_t r = 0; r < block.dim; ++r)
    for (std::uint64_t c = 0; c < block.dim; ++c)
      CHECK(std::abs(block.at(r, c) - oracle.at(r, c)) <= tol);
}

std::vector<double> random_weights(std::mt19937& rng, int d) {
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  std::vector<double> w(d);
  double total = 0.0;
  for (double& v : w) {
    v = dist(rng);
    total += v;
  }
  for (double& v : w) v /= total;
  // re-normalize exactly enough for the 1e-12 gate
  double s = 0.0;
  for (double v : w) s += v;
  w.back() += 1.0 - s;
  return w;
}

std::vector<Complex> prep_amplitudes(const std::vector<double>& w) {
  const Circuit prep = build_prep_k(w);
  StateVector sv = StateVector::basis(prep.n_qubits(), 0);
  run(prep, sv);
  return sv.amplitudes;
}

}  // namespace

TEST_CASE("build_shift basics") {
  // n = 1: both shifts reduce to X
  for (auto dir : {ShiftDirection::Minus, ShiftDirection::Plus}) {
    const auto perm = permutation_of(build_shift(1, dir));
    CHECK(perm[0] == 1);
    CHECK(perm[1] == 0);
  }

  // n = 2: S+ |3> = |0>
  const auto plus = permutation_of(build_shift(2, ShiftDirection::Plus));
  CHECK(plus[3] == 0);
  CHECK(plus[0] == 1);

  // n = 3: full cyclic permutation both ways
  const auto p3 = permutation_of(build_shift(3, ShiftDirection::Plus));
  const auto m3 = permutation_of(build_shift(3, ShiftDirection::Minus));
  for (std::uint64_t j = 0; j < 8; ++j) {
    CHECK(p3[j] == (j + 1) % 8);
    CHECK(m3[j] == (j + 7) % 8);
  }

  CHECK_THROWS_AS(build_shift(0, ShiftDirection::Plus), SpecificationError);
}

TEST_CASE("build_1d ancilla counts") {
  CHECK(build_1d(BoundaryCondition::Periodic, 3).ancilla_count == 2);
  CHECK(build_1d(BoundaryCondition::Dirichlet, 3).ancilla_count == 3);
  CHECK(build_1d(BoundaryCondition::Neumann, 3).ancilla_count == 3);
  CHECK(build_1d(BoundaryCondition::Periodic, 3).alpha == 1.0);
}

TEST_CASE("build_1d Dirichlet n=1 block") {
  const auto block = extract_block(build_1d(BoundaryCondition::Dirichlet, 1));
  CHECK(std::abs(block.at(0, 0) + 0.5) <= 1e-12);
  CHECK(std::abs(block.at(0, 1) - 0.25) <= 1e-12);
  CHECK(std::abs(block.at(1, 0) - 0.25) <= 1e-12);
  CHECK(std::abs(block.at(1, 1) + 0.5) <= 1e-12);
}

TEST_CASE("build_1d Neumann boundary column") {
  for (int n = 1; n <= 3; ++n) {
    const auto block = extract_block(build_1d(BoundaryCondition::Neumann, n));
    CHECK(std::abs(block.at(0, 0) + 0.25) <= 1e-12);
    CHECK(std::abs(block.at(1, 0) - 0.25) <= 1e-12);
    for (std::uint64_t r = 2; r < block.dim; ++r)
      CHECK(std::abs(block.at(r, 0)) <= 1e-12);
  }
}

TEST_CASE("interior columns carry the (1,-2,1)/4 stencil") {
  for (auto bc : {BoundaryCondition::Periodic, BoundaryCondition::Dirichlet,
                  BoundaryCondition::Neumann}) {
    const auto block = extract_block(build_1d(bc, 3));
    for (std::uint64_t j = 1; j + 1 < block.dim; ++j) {
      for (std::uint64_t r = 0; r < block.dim; ++r) {
        double expect = 0.0;
        if (r == j) expect = -0.5;
        if (r + 1 == j || r == j + 1) expect = 0.25;
        CHECK(std::abs(block.at(r, j) - expect) <= 1e-12);
      }
    }
  }
}

TEST_CASE("build_prep_k closed forms") {
  // D = 4, equal weights: uniform superposition
  for (const Complex& a : prep_amplitudes({0.25, 0.25, 0.25, 0.25}))
    CHECK(std::abs(a - Complex{0.5, 0.0}) <= 1e-14);

  // D = 2: single RY by 2 arccos sqrt(w0)
  const Circuit prep2 = build_prep_k({0.8, 0.2});
  REQUIRE(prep2.gates().size() == 1);
  CHECK(std::abs(prep2.gates()[0].angle -
                 2.0 * std::acos(std::sqrt(0.8))) <= 1e-15);
  const auto amps2 = prep_amplitudes({0.8, 0.2});
  CHECK(std::abs(amps2[0].real() - std::sqrt(0.8)) <= 1e-14);
  CHECK(std::abs(amps2[1].real() - std::sqrt(0.2)) <= 1e-14);

  // D = 3: first angle is 2 arccos sqrt(w0 + w2); padded state gets zero
  const Circuit prep3 = build_prep_k({0.5, 0.25, 0.25});
  CHECK(std::abs(prep3.gates()[0].angle -
                 2.0 * std::acos(std::sqrt(0.75))) <= 1e-15);
  const auto amps3 = prep_amplitudes({0.5, 0.25, 0.25});
  CHECK(std::abs(amps3[0].real() - std::sqrt(0.5)) <= 1e-14);
  CHECK(std::abs(amps3[1].real() - std::sqrt(0.25)) <= 1e-14);
  CHECK(std::abs(amps3[2].real() - std::sqrt(0.25)) <= 1e-14);
  CHECK(std::abs(amps3[3]) <= 1e-14);

  // D = 1: empty circuit
  CHECK(build_prep_k({1.0}).gates().empty());
}

TEST_CASE("build_prep_k rejects bad weights") {
  CHECK_THROWS_AS(build_prep_k({0.5, 0.4}), SpecificationError);
  CHECK_THROWS_AS(build_prep_k({1.5, -0.5}), SpecificationError);
  CHECK_THROWS_AS(build_prep_k({}), SpecificationError);
}

TEST_CASE("build_prep_k generalizes beyond D = 4") {
  std::mt19937 rng(41);
  for (int d = 5; d <= 8; ++d) {
    const auto w = random_weights(rng, d);
    const auto amps = prep_amplitudes(w);
    for (int v = 0; v < d; ++v)
      CHECK(std::abs(amps[v].real() - std::sqrt(w[v])) <= 1e-12);
    for (std::size_t v = d; v < amps.size(); ++v)
      CHECK(std::abs(amps[v]) <= 1e-12);
  }
}

TEST_CASE("build_nd ancilla counts follow 3 + ceil(log2 D)") {
  for (int d = 1; d <= 8; ++d) {
    LaplacianSpec spec;
    for (int i = 0; i < d; ++i)
      spec.axes.push_back({1, 1.0, BoundaryCondition::Dirichlet});
    const int expected =
        d == 1 ? 3 : 3 + static_cast<int>(std::ceil(std::log2(d)));
    CHECK(build_nd(spec).ancilla_count == expected);
  }
}

TEST_CASE("build_nd D=2 Dirichlet n=(1,1) matches the Kronecker sum") {
  LaplacianSpec spec;
  spec.axes = {{1, 1.0, BoundaryCondition::Dirichlet},
               {1, 1.0, BoundaryCondition::Dirichlet}};
  check_block_matches_oracle(spec, 1e-12);
}

TEST_CASE("build_nd mixed boundaries and anisotropic grids") {
  LaplacianSpec pdn;
  pdn.axes = {{1, 1.0, BoundaryCondition::Periodic},
              {1, 1.0, BoundaryCondition::Dirichlet},
              {1, 1.0, BoundaryCondition::Neumann}};
  check_block_matches_oracle(pdn, 1e-10);

  LaplacianSpec aniso;
  aniso.axes = {{2, 1.0, BoundaryCondition::Periodic},
                {2, 0.5, BoundaryCondition::Neumann}};
  check_block_matches_oracle(aniso, 1e-10);
}

TEST_CASE("build_nd D=1 delegates to build_1d") {
  LaplacianSpec spec;
  spec.axes = {{2, 0.25, BoundaryCondition::Neumann}};
  const auto desc = build_nd(spec);
  CHECK(desc.ancilla_count == 3);
  CHECK(desc.spec.axes[0].spacing == 0.25);
  check_block_matches_oracle(spec, 1e-12);
}
