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

// Scalar reference kernels. These define the canonical arithmetic: the AVX2
// variants must reproduce every result bit for bit (see kernels.hpp).

#include <bit>

#include "qiia/kernels.hpp"

namespace qiia::kernels {

namespace {

// 4-lane accumulator layout shared with the AVX2 backend. Consecutive
// elements k = 0,1,2,3 within a block map to lanes 0,2,1,3 (the order a
// 256-bit horizontal pair-add produces).
constexpr int kLane[4] = {0, 2, 1, 3};

inline double collapse(const double l[4]) {
  return (l[0] + l[1]) + (l[2] + l[3]);
}

void apply_1q_scalar(cplx* amps, std::size_t n_amps, unsigned q,
                     const cplx m[4]) {
  double* d = reinterpret_cast<double*>(amps);
  const double m00r = m[0].real(), m00i = m[0].imag();
  const double m01r = m[1].real(), m01i = m[1].imag();
  const double m10r = m[2].real(), m10i = m[2].imag();
  const double m11r = m[3].real(), m11i = m[3].imag();
  const std::size_t stride = std::size_t(1) << q;
  for (std::size_t base = 0; base < n_amps; base += 2 * stride) {
    for (std::size_t k = 0; k < stride; ++k) {
      const std::size_t i0 = 2 * (base + k);
      const std::size_t i1 = i0 + 2 * stride;
      const double a0r = d[i0], a0i = d[i0 + 1];
      const double a1r = d[i1], a1i = d[i1 + 1];
      d[i0] = (m00r * a0r - m00i * a0i) + (m01r * a1r - m01i * a1i);
      d[i0 + 1] = (m00r * a0i + m00i * a0r) + (m01r * a1i + m01i * a1r);
      d[i1] = (m10r * a0r - m10i * a0i) + (m11r * a1r - m11i * a1i);
      d[i1 + 1] = (m10r * a0i + m10i * a0r) + (m11r * a1i + m11i * a1r);
    }
  }
}

// Iterates indices i with bit a set and bit b clear as three nested strides.
template <typename F>
inline void for_each_pair_index(std::size_t n_amps, unsigned qa, unsigned qb,
                                F&& body) {
  const unsigned lo = qa < qb ? qa : qb;
  const unsigned hi = qa < qb ? qb : qa;
  const std::size_t lo_bit = std::size_t(1) << lo;
  const std::size_t hi_bit = std::size_t(1) << hi;
  const std::size_t a_bit = std::size_t(1) << qa;
  for (std::size_t high = 0; high < n_amps; high += 2 * hi_bit) {
    for (std::size_t mid = 0; mid < hi_bit; mid += 2 * lo_bit) {
      const std::size_t base = high + mid + a_bit;
      for (std::size_t k = 0; k < lo_bit; ++k) body(base + k);
    }
  }
}

void apply_cx_scalar(cplx* amps, std::size_t n_amps, unsigned control,
                     unsigned target) {
  const std::size_t flip = std::size_t(1) << target;
  for_each_pair_index(n_amps, control, target, [&](std::size_t i) {
    std::swap(amps[i], amps[i ^ flip]);
  });
}

void apply_ent_scalar(cplx* amps, std::size_t n_amps, unsigned qa, unsigned qb,
                      double cos_t, double sin_t) {
  double* d = reinterpret_cast<double*>(amps);
  const std::size_t mask = (std::size_t(1) << qa) | (std::size_t(1) << qb);
  for_each_pair_index(n_amps, qa, qb, [&](std::size_t i) {
    const std::size_t j = i ^ mask;
    const double xr = d[2 * i], xi = d[2 * i + 1];
    const double yr = d[2 * j], yi = d[2 * j + 1];
    // new_x = cos*x - i sin*y ; new_y = cos*y - i sin*x
    d[2 * i] = cos_t * xr + sin_t * yi;
    d[2 * i + 1] = cos_t * xi - sin_t * yr;
    d[2 * j] = cos_t * yr + sin_t * xi;
    d[2 * j + 1] = cos_t * yi - sin_t * xr;
  });
}

double expval_z_scalar(const cplx* amps, std::size_t n_amps,
                       std::uint64_t zmask) {
  const double* d = reinterpret_cast<const double*>(amps);
  double lanes[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n_amps; ++i) {
    const double re = d[2 * i], im = d[2 * i + 1];
    double p = re * re + im * im;
    if (std::popcount(i & zmask) & 1) p = -p;
    lanes[kLane[i & 3]] += p;
  }
  return collapse(lanes);
}

cplx expval_flip_scalar(const cplx* amps, std::size_t n_amps,
                        std::uint64_t flip_mask, std::uint64_t yz_mask) {
  const double* d = reinterpret_cast<const double*>(amps);
  double lre[4] = {0, 0, 0, 0}, lim[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n_amps; ++i) {
    const std::size_t j = i ^ flip_mask;
    const double xr = d[2 * i], xi = d[2 * i + 1];
    const double jr = d[2 * j], ji = d[2 * j + 1];
    // conj(amp_j) * amp_i
    double tr = jr * xr + ji * xi;
    double ti = jr * xi - ji * xr;
    if (std::popcount(i & yz_mask) & 1) {
      tr = -tr;
      ti = -ti;
    }
    lre[kLane[i & 3]] += tr;
    lim[kLane[i & 3]] += ti;
  }
  return {collapse(lre), collapse(lim)};
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {"scalar",        apply_1q_scalar,  apply_cx_scalar,
                          apply_ent_scalar, expval_z_scalar, expval_flip_scalar};
  return ops;
}

}  // namespace qiia::kernels
