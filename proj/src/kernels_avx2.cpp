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

// AVX2 kernel variants. Compiled with -mavx2 -ffp-contract=off; every lane
// performs the same mul/add/sub sequence as the scalar reference, and the
// reductions share its 4-lane blocked accumulation, so results are bitwise
// identical (asserted by the kernel equivalence tests).

#include "qiia/kernels.hpp"

#ifdef QIIA_HAVE_AVX2

#include <immintrin.h>

#include <bit>

namespace qiia::kernels {

namespace {

// [re, im, re, im] -> [im, re, im, re]
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// Complex multiply of two packed complexes by per-lane constants (cr, ci):
// even lanes get re' = cr*re - ci*im, odd lanes get im' = cr*im + ci*re.
inline __m256d cmul(__m256d v, __m256d cr, __m256d ci) {
  return _mm256_addsub_pd(_mm256_mul_pd(v, cr),
                          _mm256_mul_pd(swap_pairs(v), ci));
}

void apply_1q_avx2(cplx* amps, std::size_t n_amps, unsigned q,
                   const cplx m[4]) {
  double* d = reinterpret_cast<double*>(amps);
  if (q == 0) {
    // each register holds one (a0, a1) pair
    const __m256d crA = _mm256_set_pd(m[3].real(), m[3].real(), m[0].real(),
                                      m[0].real());
    const __m256d ciA = _mm256_set_pd(m[3].imag(), m[3].imag(), m[0].imag(),
                                      m[0].imag());
    const __m256d crB = _mm256_set_pd(m[2].real(), m[2].real(), m[1].real(),
                                      m[1].real());
    const __m256d ciB = _mm256_set_pd(m[2].imag(), m[2].imag(), m[1].imag(),
                                      m[1].imag());
    for (std::size_t i = 0; i < n_amps; i += 2) {
      __m256d v = _mm256_loadu_pd(d + 2 * i);
      __m256d w = _mm256_permute2f128_pd(v, v, 0x01);
      __m256d out = _mm256_add_pd(cmul(v, crA, ciA), cmul(w, crB, ciB));
      _mm256_storeu_pd(d + 2 * i, out);
    }
    return;
  }
  const __m256d m00r = _mm256_set1_pd(m[0].real());
  const __m256d m00i = _mm256_set1_pd(m[0].imag());
  const __m256d m01r = _mm256_set1_pd(m[1].real());
  const __m256d m01i = _mm256_set1_pd(m[1].imag());
  const __m256d m10r = _mm256_set1_pd(m[2].real());
  const __m256d m10i = _mm256_set1_pd(m[2].imag());
  const __m256d m11r = _mm256_set1_pd(m[3].real());
  const __m256d m11i = _mm256_set1_pd(m[3].imag());
  const std::size_t stride = std::size_t(1) << q;
  for (std::size_t base = 0; base < n_amps; base += 2 * stride) {
    for (std::size_t k = 0; k < stride; k += 2) {
      double* p0 = d + 2 * (base + k);
      double* p1 = p0 + 2 * stride;
      __m256d v0 = _mm256_loadu_pd(p0);
      __m256d v1 = _mm256_loadu_pd(p1);
      __m256d o0 = _mm256_add_pd(cmul(v0, m00r, m00i), cmul(v1, m01r, m01i));
      __m256d o1 = _mm256_add_pd(cmul(v0, m10r, m10i), cmul(v1, m11r, m11i));
      _mm256_storeu_pd(p0, o0);
      _mm256_storeu_pd(p1, o1);
    }
  }
}

template <typename F>
inline void for_each_pair_run(std::size_t n_amps, unsigned qa, unsigned qb,
                              F&& run) {
  const unsigned lo = qa < qb ? qa : qb;
  const unsigned hi = qa < qb ? qb : qa;
  const std::size_t lo_bit = std::size_t(1) << lo;
  const std::size_t hi_bit = std::size_t(1) << hi;
  const std::size_t a_bit = std::size_t(1) << qa;
  for (std::size_t high = 0; high < n_amps; high += 2 * hi_bit) {
    for (std::size_t mid = 0; mid < hi_bit; mid += 2 * lo_bit) {
      run(high + mid + a_bit, lo_bit);
    }
  }
}

void apply_cx_avx2(cplx* amps, std::size_t n_amps, unsigned control,
                   unsigned target) {
  const unsigned lo = control < target ? control : target;
  if (lo == 0) {
    scalar_ops().apply_cx(amps, n_amps, control, target);
    return;
  }
  double* d = reinterpret_cast<double*>(amps);
  const std::size_t flip = std::size_t(1) << target;
  for_each_pair_run(n_amps, control, target,
                    [&](std::size_t base, std::size_t len) {
                      for (std::size_t k = 0; k < len; k += 2) {
                        double* pi = d + 2 * (base + k);
                        double* pj = d + 2 * ((base + k) ^ flip);
                        __m256d vi = _mm256_loadu_pd(pi);
                        __m256d vj = _mm256_loadu_pd(pj);
                        _mm256_storeu_pd(pi, vj);
                        _mm256_storeu_pd(pj, vi);
                      }
                    });
}

void apply_ent_avx2(cplx* amps, std::size_t n_amps, unsigned qa, unsigned qb,
                    double cos_t, double sin_t) {
  const unsigned lo = qa < qb ? qa : qb;
  if (lo == 0) {
    scalar_ops().apply_ent(amps, n_amps, qa, qb, cos_t, sin_t);
    return;
  }
  double* d = reinterpret_cast<double*>(amps);
  const std::size_t mask = (std::size_t(1) << qa) | (std::size_t(1) << qb);
  const __m256d c = _mm256_set1_pd(cos_t);
  const __m256d ns = _mm256_set1_pd(-sin_t);
  for_each_pair_run(
      n_amps, qa, qb, [&](std::size_t base, std::size_t len) {
        for (std::size_t k = 0; k < len; k += 2) {
          const std::size_t i = base + k;
          const std::size_t j = i ^ mask;
          double* pi = d + 2 * i;
          double* pj = d + 2 * j;
          __m256d vx = _mm256_loadu_pd(pi);
          __m256d vy = _mm256_loadu_pd(pj);
          // even: c*xr + s*yi ; odd: c*xi - s*yr
          __m256d ox = _mm256_addsub_pd(_mm256_mul_pd(c, vx),
                                        _mm256_mul_pd(swap_pairs(vy), ns));
          __m256d oy = _mm256_addsub_pd(_mm256_mul_pd(c, vy),
                                        _mm256_mul_pd(swap_pairs(vx), ns));
          _mm256_storeu_pd(pi, ox);
          _mm256_storeu_pd(pj, oy);
        }
      });
}

inline double collapse256(__m256d acc) {
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

// signs for lanes ordered [e0, e2, e1, e3] (the hadd output layout)
inline __m256d sign_vec(bool s0, bool s1, bool s2, bool s3) {
  return _mm256_set_pd(s3 ? -0.0 : 0.0, s1 ? -0.0 : 0.0, s2 ? -0.0 : 0.0,
                       s0 ? -0.0 : 0.0);
}

inline bool parity(std::uint64_t v) { return std::popcount(v) & 1; }

double expval_z_avx2(const cplx* amps, std::size_t n_amps,
                     std::uint64_t zmask) {
  if (n_amps < 4) return scalar_ops().expval_z(amps, n_amps, zmask);
  const double* d = reinterpret_cast<const double*>(amps);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n_amps; i += 4) {
    __m256d v0 = _mm256_loadu_pd(d + 2 * i);
    __m256d v1 = _mm256_loadu_pd(d + 2 * i + 4);
    __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    __m256d sg =
        sign_vec(parity(i & zmask), parity((i + 1) & zmask),
                 parity((i + 2) & zmask), parity((i + 3) & zmask));
    acc = _mm256_add_pd(acc, _mm256_xor_pd(h, sg));
  }
  return collapse256(acc);
}

cplx expval_flip_avx2(const cplx* amps, std::size_t n_amps,
                      std::uint64_t flip_mask, std::uint64_t yz_mask) {
  // need 4 consecutive i to share a contiguous j-run: lowest flip bit >= 2
  if (n_amps < 4 ||
      (flip_mask != 0 && (flip_mask & 3) != 0)) {
    return scalar_ops().expval_flip(amps, n_amps, flip_mask, yz_mask);
  }
  const double* d = reinterpret_cast<const double*>(amps);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n_amps; i += 4) {
    const std::size_t j = i ^ flip_mask;
    __m256d x0 = _mm256_loadu_pd(d + 2 * i);
    __m256d x1 = _mm256_loadu_pd(d + 2 * i + 4);
    __m256d j0 = _mm256_loadu_pd(d + 2 * j);
    __m256d j1 = _mm256_loadu_pd(d + 2 * j + 4);
    // tr = jr*xr + ji*xi ; ti = jr*xi - ji*xr
    __m256d tr = _mm256_hadd_pd(_mm256_mul_pd(j0, x0), _mm256_mul_pd(j1, x1));
    __m256d ti = _mm256_hsub_pd(_mm256_mul_pd(j0, swap_pairs(x0)),
                                _mm256_mul_pd(j1, swap_pairs(x1)));
    __m256d sg =
        sign_vec(parity(i & yz_mask), parity((i + 1) & yz_mask),
                 parity((i + 2) & yz_mask), parity((i + 3) & yz_mask));
    acc_re = _mm256_add_pd(acc_re, _mm256_xor_pd(tr, sg));
    acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(ti, sg));
  }
  return {collapse256(acc_re), collapse256(acc_im)};
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {"avx2",         apply_1q_avx2,  apply_cx_avx2,
                          apply_ent_avx2, expval_z_avx2, expval_flip_avx2};
  return ops;
}

}  // namespace qiia::kernels

#else  // !QIIA_HAVE_AVX2

namespace qiia::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace qiia::kernels

#endif
