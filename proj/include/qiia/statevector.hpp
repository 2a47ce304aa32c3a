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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qiia/pauli.hpp"

namespace qiia {

/// Dense statevector, little-endian: amplitude index i encodes the basis
/// state whose qubit-q occupation is bit q of i (qubit 0 = LSB).
struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<cplx> amps;

  StateVector() = default;
  explicit StateVector(std::size_t n);

  std::size_t dim() const { return amps.size(); }
  double norm() const;  // sqrt(sum |amp|^2)
};

/// Basis state from an occupation bitstring written q_{N-1}...q_0
/// (rightmost character = qubit 0).
StateVector prepare_basis_state(std::size_t n, const std::string& occupation);

std::uint64_t occupation_to_index(const std::string& occupation);
std::string index_to_bitstring(std::uint64_t idx, std::size_t n);

enum class GateKind { X, H, Sdg, Rz, Rx, Cx, Ent };

std::string gate_kind_name(GateKind k);

/// One gate of the circuit IR. Parametrized gates reference a named slot
/// (slot >= 0) or carry a literal angle (slot == -1).
struct Gate {
  GateKind kind;
  unsigned q0 = 0;
  unsigned q1 = 0;  // target of CX / ENT; unused for 1q gates
  double angle = 0.0;
  int slot = -1;

  bool two_qubit() const { return kind == GateKind::Cx || kind == GateKind::Ent; }
  bool parametrized() const {
    return kind == GateKind::Rz || kind == GateKind::Rx ||
           kind == GateKind::Ent;
  }
};

struct CircuitIR {
  std::size_t n_qubits = 0;
  std::vector<std::string> parameter_slots;
  std::vector<Gate> gates;

  int slot_index(const std::string& name) const;
};

/// Applies one gate in place. Gates referencing a parameter slot need the
/// bound parameter vector; a missing binding throws DomainError.
void apply_gate(StateVector& state, const Gate& gate,
                std::span<const double> params = {});

/// Applies gates in list order to a copy of the input.
StateVector run_circuit(const CircuitIR& circuit, std::span<const double> params,
                        const StateVector& input);

/// sum_k w_k <psi|P_k|psi>, accumulated with compensated summation in the
/// canonical term order. Throws DomainError on qubit-count mismatch or when
/// |Im| of the total exceeds 1e-8.
double expectation(const StateVector& state, const QubitHamiltonian& h);

/// <psi|P|psi> for one word.
cplx word_expectation(const StateVector& state, const PauliWord& word);

/// Multinomial sampling of |amp|^2; bitstring keys use the display
/// convention (qubit 0 rightmost). Deterministic for a given seed.
std::map<std::string, std::uint64_t> sample(const StateVector& state,
                                            std::uint64_t shots,
                                            std::uint64_t seed);

/// Raw sampled basis indices in draw order (shared by sample/estimators).
std::vector<std::uint64_t> sample_indices(const StateVector& state,
                                          std::uint64_t shots,
                                          std::uint64_t seed);

/// State file IO. Format:
///   NQUBITS <n>
///   <bitstring> <real> <imag>      (bitstring q_{N-1}...q_0)
/// The loader renormalizes silently for |norm-1| <= 1e-6, renormalizes with
/// a warning on stderr up to 1e-3, and throws ParseError beyond.
StateVector load_state_file(const std::string& path);
void save_state_file(const StateVector& state, const std::string& path,
                     double amplitude_cutoff = 0.0);

}  // namespace qiia
