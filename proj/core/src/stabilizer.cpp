// Copyright 2026 The stabdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabdet/stabilizer.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "stabdet/errors.hpp"

namespace stabdet {

GeneratorSet::GeneratorSet(std::size_t n, std::vector<PauliOperator> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.n() != n_) throw std::invalid_argument("generator acts on the wrong number of qubits");
  }
}

GeneratorSet GeneratorSet::parse(const std::vector<std::string>& paulis) {
  std::vector<PauliOperator> ops;
  ops.reserve(paulis.size());
  for (const auto& p : paulis) ops.push_back(PauliOperator::parse(p));
  if (ops.empty()) throw std::invalid_argument("cannot infer qubit count from an empty list");
  const std::size_t n = ops.front().n();
  return {n, std::move(ops)};
}

F2Matrix generator_matrix(const GeneratorSet& gens) {
  const std::size_t n = gens.n();
  F2Matrix s(2 * n, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    for (std::size_t q = 0; q < n; ++q) {
      s.set(q, c, gens[c].z()[q]);
      s.set(n + q, c, gens[c].x()[q]);
    }
  }
  return s;
}

F2Matrix z_block(const GeneratorSet& gens) { return generator_matrix(gens).row_block(0, gens.n()); }

F2Matrix x_block(const GeneratorSet& gens) {
  return generator_matrix(gens).row_block(gens.n(), gens.n());
}

ValidationReport validate(const GeneratorSet& gens) {
  ValidationReport report;
  if (gens.size() > gens.n()) {
    report.size_ok = false;
    report.problems.push_back("more generators than qubits");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_hermitian()) {
      report.hermitian = false;
      report.problems.push_back("generator " + std::to_string(i) + " has an imaginary phase");
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        report.commuting = false;
        report.problems.push_back("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                  " anticommute");
      }
    }
  }
  if (!gens.empty() && f2_rank(generator_matrix(gens)) != gens.size()) {
    report.independent = false;
    report.problems.push_back("generators are linearly dependent over F2");
  }
  return report;
}

void require_valid(const GeneratorSet& gens) {
  const auto report = validate(gens);
  if (report.valid()) return;
  std::string msg = "invalid generator set:";
  for (const auto& p : report.problems) msg += " " + p + ";";
  throw std::invalid_argument(msg);
}

namespace {

template <typename Visit>
void for_each_group_element(const GeneratorSet& gens, Visit&& visit) {
  const std::size_t l = gens.size();
  if (l > kGroupEnumerationCap) {
    throw CapExceeded("group enumeration over " + std::to_string(l) + " generators exceeds cap");
  }
  PauliOperator current = PauliOperator::identity(gens.n());
  visit(current);
  const std::uint64_t count = std::uint64_t{1} << l;
  for (std::uint64_t k = 1; k < count; ++k) {
    // Gray code step: gray(k) differs from gray(k-1) in bit ctz(k).
    const auto bit = static_cast<std::size_t>(std::countr_zero(k));
    current = multiply(current, gens[bit]);
    visit(current);
  }
}

}  // namespace

std::vector<PauliOperator> enumerate_group(const GeneratorSet& gens) {
  require_valid(gens);
  std::vector<PauliOperator> out;
  out.reserve(std::size_t{1} << gens.size());
  for_each_group_element(gens, [&](const PauliOperator& m) { out.push_back(m); });
  return out;
}

bool group_contains(const GeneratorSet& gens, const PauliOperator& op) {
  require_valid(gens);
  if (op.n() != gens.n()) throw std::invalid_argument("operator size mismatch");
  if (gens.empty()) return op == PauliOperator::identity(gens.n());
  const F2Matrix s = generator_matrix(gens);
  BitVector target(2 * gens.n());
  for (std::size_t q = 0; q < gens.n(); ++q) {
    target.set(q, op.z()[q]);
    target.set(gens.n() + q, op.x()[q]);
  }
  const auto coeffs = f2_solve(s, target);
  if (!coeffs) return false;
  PauliOperator product = PauliOperator::identity(gens.n());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((*coeffs)[i]) product = multiply(product, gens[i]);
  }
  return product == op;
}

ComplexMatrix density_matrix(const GeneratorSet& gens, const DenseCaps& caps) {
  require_valid(gens);
  const std::size_t n = gens.n();
  require_matrix_cap(n, caps);
  const std::uint64_t dim = std::uint64_t{1} << n;
  ComplexMatrix rho = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for_each_group_element(gens, [&](const PauliOperator& m) {
    const std::uint64_t shift = m.x().to_index();
    for (std::uint64_t row = 0; row < dim; ++row) {
      rho(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row ^ shift)) += row_entry(m, row);
    }
  });
  return rho / static_cast<double>(dim);
}

ComplexMatrix stabilizer_rdm(const GeneratorSet& gens, const IndexSet& omega, const DenseCaps& caps) {
  require_valid(gens);
  if (omega.empty()) throw std::invalid_argument("reduced density matrix needs a nonempty subsystem");
  if (normalize(omega) != omega) throw std::invalid_argument("subsystem must be sorted and unique");
  if (omega.back() >= gens.n()) throw std::out_of_range("subsystem index out of range");
  require_matrix_cap(omega.size(), caps);

  const std::uint64_t dim = std::uint64_t{1} << omega.size();
  ComplexMatrix rho = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for_each_group_element(gens, [&](const PauliOperator& m) {
    if (!is_subset(support(m), omega)) return;
    const PauliOperator local = restrict(m, omega);
    const std::uint64_t shift = local.x().to_index();
    for (std::uint64_t row = 0; row < dim; ++row) {
      rho(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row ^ shift)) +=
          row_entry(local, row);
    }
  });
  return rho / static_cast<double>(dim);
}

GeneratorSet recombine_generators(const GeneratorSet& gens, const F2Matrix& recombination) {
  require_valid(gens);
  const std::size_t l = gens.size();
  if (recombination.rows() != l || recombination.cols() != l) {
    throw std::invalid_argument("recombination matrix must be l x l");
  }
  if (f2_rank(recombination) != l) throw std::invalid_argument("recombination matrix is singular");
  std::vector<PauliOperator> out;
  out.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    PauliOperator product = PauliOperator::identity(gens.n());
    for (std::size_t i = 0; i < l; ++i) {
      if (recombination.at(i, j)) product = multiply(product, gens[i]);
    }
    out.push_back(std::move(product));
  }
  return {gens.n(), std::move(out)};
}

std::vector<std::size_t> minimal_support_indices(const GeneratorSet& gens) {
  std::vector<IndexSet> supports;
  supports.reserve(gens.size());
  for (const auto& g : gens) supports.push_back(support(g));

  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < supports.size(); ++s) {
    bool dropped = false;
    for (std::size_t t = 0; t < supports.size() && !dropped; ++t) {
      if (t == s || !is_subset(supports[s], supports[t])) continue;
      // Strictly smaller, or equal to a lower-indexed support.
      dropped = supports[s] != supports[t] || t < s;
    }
    if (!dropped) kept.push_back(s);
  }
  return kept;
}

std::vector<IndexSet> minimal_support_set(const GeneratorSet& gens) {
  std::vector<IndexSet> out;
  for (auto s : minimal_support_indices(gens)) out.push_back(support(gens[s]));
  return out;
}

namespace {

using ProjectorKey = std::vector<long long>;

ProjectorKey projector_key(const ComplexMatrix& rho) {
  ProjectorKey key;
  key.reserve(static_cast<std::size_t>(2 * rho.size()));
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      key.push_back(std::llround(rho(r, c).real() * 1e9));
      key.push_back(std::llround(rho(r, c).imag() * 1e9));
    }
  }
  return key;
}

PauliOperator pauli_from_code(std::size_t n, std::uint64_t code) {
  // Low n bits: x-part, high n bits: z-part; qubit 0 is the most significant.
  return {BitVector::from_index(n, code >> n), BitVector::from_index(n, code & ((1u << n) - 1))};
}

}  // namespace

std::vector<ComplexMatrix> enumerate_stabilizer_states(std::size_t n) {
  if (n == 0 || n > 3) {
    throw CapExceeded("stabilizer state enumeration supports 1 <= n <= 3");
  }
  const std::uint64_t codes = std::uint64_t{1} << (2 * n);
  std::vector<PauliOperator> paulis;
  for (std::uint64_t c = 1; c < codes; ++c) paulis.push_back(pauli_from_code(n, c));

  std::vector<ComplexMatrix> states;
  std::set<ProjectorKey> seen;
  std::vector<std::size_t> pick(n);

  // Increasing index tuples over the non-identity Paulis.
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == n) {
      std::vector<PauliOperator> base;
      for (auto i : pick) base.push_back(paulis[i]);
      if (!validate(GeneratorSet(n, base)).valid()) return;
      for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
        std::vector<PauliOperator> signed_ops = base;
        for (std::size_t k = 0; k < n; ++k) {
          if ((signs >> k) & 1u) signed_ops[k] = signed_ops[k].negated();
        }
        ComplexMatrix rho = density_matrix(GeneratorSet(n, std::move(signed_ops)));
        if (seen.insert(projector_key(rho)).second) states.push_back(std::move(rho));
      }
      return;
    }
    for (std::size_t i = start; i < paulis.size(); ++i) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) ok = commutes(paulis[pick[d]], paulis[i]);
      if (!ok) continue;
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return states;
}

GeneratorSet read_generator_file(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      const auto e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      return true;
    }
    return false;
  };
  if (!next()) throw ParseError("missing qubit count", line_no);
  if (line.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("first line must be the qubit count", line_no);
  }
  const std::size_t n = std::stoull(line);
  if (n == 0) throw ParseError("qubit count must be positive", line_no);
  std::vector<PauliOperator> ops;
  while (next()) {
    PauliOperator op;
    try {
      op = PauliOperator::parse(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (op.n() != n) {
      throw ParseError("Pauli string has " + std::to_string(op.n()) + " factors, expected " +
                           std::to_string(n),
                       line_no);
    }
    ops.push_back(std::move(op));
  }
  return {n, std::move(ops)};
}

void write_generator_file(std::ostream& os, const GeneratorSet& gens) {
  os << gens.n() << '\n';
  for (const auto& g : gens) os << g.to_string() << '\n';
}

}  // namespace stabdet
