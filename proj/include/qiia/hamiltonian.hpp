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

#include <Eigen/Dense>
#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qiia/pauli.hpp"

namespace qiia {

/// Spin-orbital integrals as read from an AMO integral file. Two-body
/// entries are stored exactly as listed: g[(p,q,r,s)] is the coefficient of
/// a+_p a+_q a_s a_r, and the 1/2 prefactor is applied at assembly. No
/// symmetry expansion is performed.
struct SpinOrbitalIntegrals {
  std::size_t n_spin_orbitals = 0;
  std::size_t n_electrons = 0;
  double core_energy = 0.0;
  std::map<std::size_t, double> orbital_eps;  // optional EPS records
  std::map<std::pair<std::size_t, std::size_t>, double> one_body;
  std::map<std::array<std::size_t, 4>, double> two_body;

  double h(std::size_t p, std::size_t q) const {
    auto it = one_body.find({p, q});
    return it == one_body.end() ? 0.0 : it->second;
  }
  double g(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    auto it = two_body.find({p, q, r, s});
    return it == two_body.end() ? 0.0 : it->second;
  }
};

/// Parses AMO integral text. Line format, one record per line:
///   # comment
///   NORB <int>      NELEC <int>     ECORE <float>
///   EPS <p> <float>
///   H1 <p> <q> <float>
///   H2 <p> <q> <r> <s> <float>
/// Indices are 0-based. Throws ParseError with the offending line number.
SpinOrbitalIntegrals parse_integrals(std::string_view text);
SpinOrbitalIntegrals load_integrals_file(const std::string& path);

/// Jordan-Wigner image of a single ladder operator on n qubits:
///   a_p   -> 1/2 (X_p + iY_p) Z_{p-1} ... Z_0
///   a+_p  -> 1/2 (X_p - iY_p) Z_{p-1} ... Z_0
/// The Z string sits on strictly lower qubit indices (little-endian order).
std::vector<PauliTerm> jw_ladder(std::size_t p, bool dagger, std::size_t n);

/// Assembles H_q = sum h_pq JW(a+_p a_q)
///               + 1/2 sum g_pqrs JW(a+_p a+_q a_s a_r) + E_core * I,
/// combining duplicate words and dropping |w| < prune. Coefficients must
/// come out real (|Im| > 1e-10 on any surviving term raises DomainError).
QubitHamiltonian build_qubit_hamiltonian(const SpinOrbitalIntegrals& ints,
                                         double prune = 1e-12);

/// Dense 2^N x 2^N matrix of a Pauli sum, little-endian (qubit 0 is the
/// least significant tensor factor). Guarded to n_qubits <= 14.
Eigen::MatrixXcd dense_matrix(const QubitHamiltonian& h);

/// Dense matrix of a single word (same convention), used by dense_matrix.
Eigen::MatrixXcd dense_word_matrix(const PauliWord& w);

}  // namespace qiia
