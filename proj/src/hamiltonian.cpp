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

#include "qiia/hamiltonian.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qiia/errors.hpp"

namespace qiia {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw ParseError("integral file, line " + std::to_string(line_no) + ": " +
                   msg);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line_no) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    parse_fail(line_no, "bad index '" + tok + "'");
  }
  return v;
}

double parse_float(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(line_no, "bad float '" + tok + "'");
  }
}

}  // namespace

SpinOrbitalIntegrals parse_integrals(std::string_view text) {
  SpinOrbitalIntegrals ints;
  bool have_norb = false, have_nelec = false, have_ecore = false;
  std::size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string line;

  auto check_orb = [&](std::size_t p) {
    if (!have_norb) parse_fail(line_no, "index record before NORB");
    if (p >= ints.n_spin_orbitals) {
      parse_fail(line_no, "orbital index " + std::to_string(p) +
                              " out of range (NORB = " +
                              std::to_string(ints.n_spin_orbitals) + ")");
    }
  };

  while (std::getline(stream, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];

    if (key == "NORB") {
      if (toks.size() != 2) parse_fail(line_no, "NORB wants 1 argument");
      if (have_norb) parse_fail(line_no, "duplicate NORB");
      ints.n_spin_orbitals = parse_index(toks[1], line_no);
      have_norb = true;
    } else if (key == "NELEC") {
      if (toks.size() != 2) parse_fail(line_no, "NELEC wants 1 argument");
      if (have_nelec) parse_fail(line_no, "duplicate NELEC");
      ints.n_electrons = parse_index(toks[1], line_no);
      have_nelec = true;
    } else if (key == "ECORE") {
      if (toks.size() != 2) parse_fail(line_no, "ECORE wants 1 argument");
      if (have_ecore) parse_fail(line_no, "duplicate ECORE");
      ints.core_energy = parse_float(toks[1], line_no);
      have_ecore = true;
    } else if (key == "EPS") {
      if (toks.size() != 3) parse_fail(line_no, "EPS wants 2 arguments");
      std::size_t p = parse_index(toks[1], line_no);
      check_orb(p);
      ints.orbital_eps[p] = parse_float(toks[2], line_no);
    } else if (key == "H1") {
      if (toks.size() != 4) parse_fail(line_no, "H1 wants 3 arguments");
      std::size_t p = parse_index(toks[1], line_no);
      std::size_t q = parse_index(toks[2], line_no);
      check_orb(p);
      check_orb(q);
      ints.one_body[{p, q}] += parse_float(toks[3], line_no);
    } else if (key == "H2") {
      if (toks.size() != 6) parse_fail(line_no, "H2 wants 5 arguments");
      std::array<std::size_t, 4> pqrs;
      for (int i = 0; i < 4; ++i) {
        pqrs[i] = parse_index(toks[1 + i], line_no);
        check_orb(pqrs[i]);
      }
      ints.two_body[pqrs] += parse_float(toks[5], line_no);
    } else {
      parse_fail(line_no, "unknown record '" + key + "'");
    }
  }

  if (!have_norb) throw ParseError("integral file: missing NORB");
  if (!have_nelec) throw ParseError("integral file: missing NELEC");
  if (ints.n_electrons == 0 || ints.n_electrons > ints.n_spin_orbitals) {
    throw ParseError("integral file: NELEC " +
                     std::to_string(ints.n_electrons) +
                     " outside (0, NORB]");
  }
  return ints;
}

SpinOrbitalIntegrals load_integrals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open integral file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_integrals(buf.str());
}

std::vector<PauliTerm> jw_ladder(std::size_t p, bool dagger, std::size_t n) {
  if (p >= n) {
    throw DomainError("jw_ladder: orbital " + std::to_string(p) +
                      " out of range for " + std::to_string(n) + " qubits");
  }
  PauliWord x_word(n, 'I'), y_word(n, 'I');
  for (std::size_t k = 0; k < p; ++k) {
    x_word[k] = 'Z';
    y_word[k] = 'Z';
  }
  x_word[p] = 'X';
  y_word[p] = 'Y';
  cplx y_coeff = dagger ? cplx(0, -0.5) : cplx(0, 0.5);
  return {{cplx(0.5, 0), x_word}, {y_coeff, y_word}};
}

namespace {

// Product of ladder-operator expansions accumulated into a Hamiltonian.
void add_operator_product(QubitHamiltonian& h, cplx prefactor,
                          const std::vector<std::vector<PauliTerm>>& factors) {
  std::vector<PauliTerm> acc = {{prefactor, h.identity_word()}};
  for (const auto& factor : factors) {
    std::vector<PauliTerm> next;
    next.reserve(acc.size() * factor.size());
    for (const auto& a : acc) {
      for (const auto& b : factor) {
        next.push_back(pauli_multiply(a, b));
      }
    }
    acc = std::move(next);
  }
  for (const auto& t : acc) h.add(t);
}

}  // namespace

QubitHamiltonian build_qubit_hamiltonian(const SpinOrbitalIntegrals& ints,
                                         double prune) {
  const std::size_t n = ints.n_spin_orbitals;
  QubitHamiltonian h(n);
  h.add(h.identity_word(), ints.core_energy);

  for (const auto& [pq, v] : ints.one_body) {
    add_operator_product(h, v,
                         {jw_ladder(pq.first, true, n),
                          jw_ladder(pq.second, false, n)});
  }
  for (const auto& [pqrs, v] : ints.two_body) {
    add_operator_product(h, 0.5 * v,
                         {jw_ladder(pqrs[0], true, n),
                          jw_ladder(pqrs[1], true, n),
                          jw_ladder(pqrs[3], false, n),
                          jw_ladder(pqrs[2], false, n)});
  }

  h.prune(prune);
  for (auto& [word, coeff] : h.terms) {
    if (std::abs(coeff.imag()) > 1e-10) {
      throw DomainError("non-Hermitian integrals: term " + display_word(word) +
                        " has imaginary coefficient " +
                        std::to_string(coeff.imag()));
    }
    coeff = cplx(coeff.real(), 0.0);
  }
  return h;
}

Eigen::MatrixXcd dense_word_matrix(const PauliWord& w) {
  static const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd X, Y, Z;
  X << 0, 1, 1, 0;
  Y << 0, cplx(0, -1), cplx(0, 1), 0;
  Z << 1, 0, 0, -1;
  auto letter = [&](char c) -> const Eigen::Matrix2cd& {
    switch (c) {
      case 'X': return X;
      case 'Y': return Y;
      case 'Z': return Z;
      default: return I;
    }
  };
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  // qubit 0 least significant: prepend higher qubits on the left of the kron
  for (char c : w) {
    const Eigen::Matrix2cd& p = letter(c);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) =
            p(i, j) * m;
      }
    }
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const QubitHamiltonian& h) {
  if (h.n_qubits > 14) {
    throw DomainError("dense_matrix: " + std::to_string(h.n_qubits) +
                      " qubits exceeds the n <= 14 guard");
  }
  const Eigen::Index dim = Eigen::Index(1) << h.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [word, coeff] : h.terms) {
    m += coeff * dense_word_matrix(word);
  }
  return m;
}

}  // namespace qiia
