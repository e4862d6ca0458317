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

#include "stabdet/pauli.hpp"

#include <stdexcept>

#include "stabdet/errors.hpp"

namespace stabdet {

Complex to_complex(Phase p) {
  switch (p) {
    case Phase::kPlusOne:
      return {1.0, 0.0};
    case Phase::kPlusI:
      return {0.0, 1.0};
    case Phase::kMinusOne:
      return {-1.0, 0.0};
    case Phase::kMinusI:
      return {0.0, -1.0};
  }
  return {};
}

PauliOperator::PauliOperator(BitVector z, BitVector x, Phase phase)
    : z_(std::move(z)), x_(std::move(x)), phase_(phase) {
  if (z_.size() != x_.size()) throw std::invalid_argument("z and x parts differ in length");
}

PauliOperator PauliOperator::identity(std::size_t n) { return {BitVector(n), BitVector(n)}; }

PauliOperator PauliOperator::parse(std::string_view text) {
  Phase phase = Phase::kPlusOne;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = Phase::kMinusOne;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty Pauli string");
  BitVector z(text.size());
  BitVector x(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x.set(q, true);
        break;
      case 'Z':
        z.set(q, true);
        break;
      case 'Y':
        x.set(q, true);
        z.set(q, true);
        break;
      default:
        throw ParseError("invalid Pauli character '" + std::string(1, text[q]) + "'");
    }
  }
  return {std::move(z), std::move(x), phase};
}

char PauliOperator::factor(std::size_t qubit) const {
  static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
  return kNames[(z_[qubit] ? 2 : 0) | (x_[qubit] ? 1 : 0)];
}

std::string PauliOperator::to_string() const {
  std::string s;
  switch (phase_) {
    case Phase::kPlusOne:
      break;
    case Phase::kMinusOne:
      s = "-";
      break;
    case Phase::kPlusI:
      s = "+i";
      break;
    case Phase::kMinusI:
      s = "-i";
      break;
  }
  for (std::size_t q = 0; q < n(); ++q) s.push_back(factor(q));
  return s;
}

std::pair<BitVector, BitVector> to_binary(const PauliOperator& op) { return {op.z(), op.x()}; }

PauliOperator from_binary(const BitVector& u, const BitVector& v, Phase phase) {
  return {u, v, phase};
}

namespace {

// Exponent of i picked up by sigma_(z1,x1) * sigma_(z2,x2) on one qubit.
int product_exponent(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);
  if (x1) return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
  return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

void require_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Pauli operators act on different qubit counts");
}

}  // namespace

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  int k = exponent(a.phase()) + exponent(b.phase());
  for (std::size_t q = 0; q < a.n(); ++q) {
    k += product_exponent(a.x()[q], a.z()[q], b.x()[q], b.z()[q]);
  }
  return {a.z() ^ b.z(), a.x() ^ b.x(), phase_from_exponent(k)};
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  return a.z().dot(b.x()) == a.x().dot(b.z());
}

IndexSet support(const PauliOperator& op) {
  IndexSet s;
  for (std::size_t q = 0; q < op.n(); ++q) {
    if (op.z()[q] || op.x()[q]) s.push_back(q);
  }
  return s;
}

PauliOperator restrict(const PauliOperator& op, const IndexSet& omega) {
  BitVector z(omega.size());
  BitVector x(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (omega[j] >= op.n()) throw std::out_of_range("restriction index out of range");
    if (j > 0 && omega[j] <= omega[j - 1]) {
      throw std::invalid_argument("restriction set must be sorted and unique");
    }
    z.set(j, op.z()[omega[j]]);
    x.set(j, op.x()[omega[j]]);
  }
  return {std::move(z), std::move(x), op.phase()};
}

Complex row_entry(const PauliOperator& op, std::uint64_t row) {
  // sigma_(u,v) = i^(u.v) X^v Z^u per qubit, and X^v Z^u maps |c> -> (-1)^(u c)|c ^ v>,
  // so the sign is set by the column index c = row ^ v.
  const std::size_t n = op.n();
  const std::uint64_t col = row ^ op.x().to_index();
  int k = exponent(op.phase());
  bool negative = false;
  for (std::size_t q = 0; q < n; ++q) {
    const bool u = op.z()[q];
    if (u && op.x()[q]) ++k;
    if (u && ((col >> (n - 1 - q)) & 1u)) negative = !negative;
  }
  const Complex value = to_complex(phase_from_exponent(k));
  return negative ? -value : value;
}

ComplexMatrix dense_matrix(const PauliOperator& op, const DenseCaps& caps) {
  require_matrix_cap(op.n(), caps);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << op.n());
  const std::uint64_t shift = op.x().to_index();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::uint64_t row = 0; row < static_cast<std::uint64_t>(dim); ++row) {
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row ^ shift)) = row_entry(op, row);
  }
  return m;
}

}  // namespace stabdet
