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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qiia {

using cplx = std::complex<double>;

// A Pauli word is a string over {I,X,Y,Z} with word[q] acting on qubit q.
// Display (reports, files) reverses the string so that qubit 0 is the
// rightmost character, matching the basis-state bitstring convention.
using PauliWord = std::string;

inline bool is_pauli_letter(char c) {
  return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

/// One weighted Pauli word.
struct PauliTerm {
  cplx coeff;
  PauliWord word;
};

/// Product of two equal-length Pauli terms with phase tracking (XY = iZ
/// cyclically). Throws DomainError on length mismatch.
PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b);

/// Weighted sum of Pauli words over a fixed qubit count. Terms live in a
/// map keyed by word, so iteration order is the canonical (lexicographic)
/// term order used for all deterministic reductions.
struct QubitHamiltonian {
  std::size_t n_qubits = 0;
  std::map<PauliWord, cplx> terms;

  explicit QubitHamiltonian(std::size_t n = 0) : n_qubits(n) {}

  /// Accumulates a term, combining duplicates.
  void add(const PauliTerm& t);
  void add(const PauliWord& word, cplx coeff);

  /// Drops terms with |coeff| < tol.
  void prune(double tol);

  std::size_t size() const { return terms.size(); }
  std::string identity_word() const { return std::string(n_qubits, 'I'); }
};

/// Word for display: qubit 0 rightmost.
std::string display_word(const PauliWord& w);
PauliWord parse_display_word(const std::string& s);

}  // namespace qiia
