// Copyright 2026 The qiia Authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace qiia::kernels {

using cplx = std::complex<double>;

// Amplitude-array kernels behind the statevector simulator. Two backends:
// a scalar reference and an AVX2 variant selected at runtime. Both are
// bitwise-equivalent by construction:
//   - gate kernels perform the same per-element arithmetic (mul/add/sub in
//     the same association; FP contraction is disabled in both TUs), and
//   - reductions accumulate into four lanes in a fixed blocked order and
//     collapse as (l0+l1)+(l2+l3), so vector and scalar sums agree exactly.
// Kernel signatures take the raw interleaved re/im array of 2^n amplitudes.

struct Ops {
  const char* name;

  // new = m * old on the (q0=0,q1=1) amplitude pairs of qubit q;
  // m is row-major 2x2: {m00, m01, m10, m11}.
  void (*apply_1q)(cplx* amps, std::size_t n_amps, unsigned q,
                   const cplx m[4]);

  // Controlled-X: swaps amp[i] and amp[i ^ (1<<target)] for control bit set.
  void (*apply_cx)(cplx* amps, std::size_t n_amps, unsigned control,
                   unsigned target);

  // Particle-conserving entangler on the {01,10} block of qubits (a,b):
  //   new_i = cos*amp_i - i*sin*amp_j,  j = i ^ (1<<a) ^ (1<<b),
  // identity on the {00,11} block.
  void (*apply_ent)(cplx* amps, std::size_t n_amps, unsigned qa, unsigned qb,
                    double cos_t, double sin_t);

  // sum_i (-1)^parity(i & zmask) * |amp_i|^2 (zmask = 0 gives the norm^2).
  double (*expval_z)(const cplx* amps, std::size_t n_amps,
                     std::uint64_t zmask);

  // <psi| P |psi> for a general word given as X/Y/Z support masks,
  // excluding the global i^{#Y} prefactor which the caller applies.
  cplx (*expval_flip)(const cplx* amps, std::size_t n_amps,
                      std::uint64_t flip_mask, std::uint64_t yz_mask);
};

const Ops& scalar_ops();
const Ops& avx2_ops();  // == scalar_ops() when AVX2 is unavailable

bool avx2_supported();

/// Backend in use by the simulator. Defaults to the best supported one.
const Ops& active_ops();

/// Overrides selection: "auto", "scalar" or "avx2". Throws on unsupported.
void select_backend(const std::string& name);

}  // namespace qiia::kernels
