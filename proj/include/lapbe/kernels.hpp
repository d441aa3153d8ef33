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
 * Amplitude-update kernels. The serial variant is the reference; the OpenMP
 * variant partitions the same per-pair updates across threads. Each amplitude
 * pair is written by exactly one iteration and there are no floating-point
 * reductions, so both variants are bitwise identical at any thread count.
 */

#pragma once

#include <complex>
#include <cstdint>

namespace lapbe::kernels {

using Complex = std::complex<double>;

inline void apply_pair(Complex& a0, Complex& a1, const Complex u[4]) {
  const Complex t0 = u[0] * a0 + u[1] * a1;
  const Complex t1 = u[2] * a0 + u[3] * a1;
  a0 = t0;
  a1 = t1;
}

/// Applies the 2x2 matrix `u` on qubit `target` to every basis pair whose
/// index satisfies (index & control_mask) == control_value.
void apply_1q_serial(Complex* amps, std::uint64_t n_amps, std::uint32_t target,
                     const Complex u[4], std::uint64_t control_mask,
                     std::uint64_t control_value);

void apply_1q_parallel(Complex* amps, std::uint64_t n_amps,
                       std::uint32_t target, const Complex u[4],
                       std::uint64_t control_mask,
                       std::uint64_t control_value);

}  // namespace lapbe::kernels
