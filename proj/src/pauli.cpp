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

#include "qiia/pauli.hpp"

#include <algorithm>

#include "qiia/errors.hpp"

namespace qiia {

namespace {

// Single-letter product: returns the resulting letter and the phase exponent
// k such that a*b = i^k * result.
struct LetterProduct {
  char letter;
  int phase_pow;  // power of i, 0..3
};

LetterProduct letter_multiply(char a, char b) {
  if (a == 'I') return {b, 0};
  if (b == 'I') return {a, 0};
  if (a == b) return {'I', 0};
  // cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order picks up i^3
  auto cyc = [](char c) { return c == 'X' ? 0 : (c == 'Y' ? 1 : 2); };
  int ia = cyc(a), ib = cyc(b);
  char out = "XYZ"[3 - ia - ib];
  bool forward = (ib == (ia + 1) % 3);
  return {out, forward ? 1 : 3};
}

}  // namespace

PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b) {
  if (a.word.size() != b.word.size()) {
    throw DomainError("pauli_multiply: word length mismatch (" +
                      std::to_string(a.word.size()) + " vs " +
                      std::to_string(b.word.size()) + ")");
  }
  PauliWord out(a.word.size(), 'I');
  int phase_pow = 0;
  for (std::size_t q = 0; q < a.word.size(); ++q) {
    LetterProduct p = letter_multiply(a.word[q], b.word[q]);
    out[q] = p.letter;
    phase_pow = (phase_pow + p.phase_pow) & 3;
  }
  static const cplx phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {a.coeff * b.coeff * phases[phase_pow], out};
}

void QubitHamiltonian::add(const PauliTerm& t) { add(t.word, t.coeff); }

void QubitHamiltonian::add(const PauliWord& word, cplx coeff) {
  if (word.size() != n_qubits) {
    throw DomainError("QubitHamiltonian::add: word length " +
                      std::to_string(word.size()) + " != qubit count " +
                      std::to_string(n_qubits));
  }
  auto [it, inserted] = terms.emplace(word, coeff);
  if (!inserted) it->second += coeff;
}

void QubitHamiltonian::prune(double tol) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) < tol) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

std::string display_word(const PauliWord& w) {
  return {w.rbegin(), w.rend()};
}

PauliWord parse_display_word(const std::string& s) {
  for (char c : s) {
    if (!is_pauli_letter(c)) {
      throw ParseError("invalid Pauli letter '" + std::string(1, c) + "'");
    }
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace qiia
