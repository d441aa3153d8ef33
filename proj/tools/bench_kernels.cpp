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

// Compares the serial reference kernels against the OpenMP kernels on the
// block-encoding circuit for a Neumann-Neumann 2D Laplacian.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "lapbe/encoder.hpp"
#include "lapbe/simulator.hpp"

namespace {

double time_run(const lapbe::Circuit& c, bool parallel, int repeats) {
  using clock = std::chrono::steady_clock;
  lapbe::SimOptions opts;
  opts.parallel = parallel;
  opts.max_qubits = 30;
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    lapbe::StateVector sv = lapbe::StateVector::basis(c.n_qubits(), 0);
    const auto t0 = clock::now();
    lapbe::run(c, sv, opts);
    const auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n_per_axis = argc > 1 ? std::atoi(argv[1]) : 10;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  lapbe::LaplacianSpec spec;
  spec.axes = {{n_per_axis, 1.0, lapbe::BoundaryCondition::Neumann},
               {n_per_axis, 1.0, lapbe::BoundaryCondition::Neumann}};
  const auto desc = lapbe::build_nd(spec);

  std::cout << "qubits: " << desc.circuit.n_qubits()
            << "  threads: " << omp_get_max_threads() << '\n';
  const double serial = time_run(desc.circuit, false, repeats);
  const double parallel = time_run(desc.circuit, true, repeats);
  std::cout << "serial:   " << serial << " s\n";
  std::cout << "parallel: " << parallel << " s\n";
  std::cout << "speedup:  " << serial / parallel << "x\n";
  return 0;
}
