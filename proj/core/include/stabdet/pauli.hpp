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

#ifndef STABDET_PAULI_HPP_
#define STABDET_PAULI_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "stabdet/dense.hpp"
#include "stabdet/f2.hpp"

namespace stabdet {

/// One of {+1, +i, -1, -i}, stored as the exponent of i.
enum class Phase : std::uint8_t { kPlusOne = 0, kPlusI = 1, kMinusOne = 2, kMinusI = 3 };

constexpr Phase phase_from_exponent(int k) {
  return static_cast<Phase>(((k % 4) + 4) % 4);
}
constexpr int exponent(Phase p) { return static_cast<int>(p); }
constexpr Phase operator*(Phase a, Phase b) { return phase_from_exponent(exponent(a) + exponent(b)); }
constexpr Phase conj(Phase p) { return phase_from_exponent(-exponent(p)); }
constexpr bool is_real(Phase p) { return (exponent(p) & 1) == 0; }
Complex to_complex(Phase p);

/// Pauli operator `phase * sigma_(u1,v1) (x) ... (x) sigma_(un,vn)`.
///
/// Per qubit, (u, v) = (0,0) -> I, (0,1) -> X, (1,0) -> Z, (1,1) -> Y, where
/// Y is the Hermitian matrix [[0,-i],[i,0]]. `z()` is u and `x()` is v.
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(BitVector z, BitVector x, Phase phase = Phase::kPlusOne);

  static PauliOperator identity(std::size_t n);
  /// Optional '+'/'-' then one of I/X/Y/Z per qubit, e.g. "-XZII".
  static PauliOperator parse(std::string_view text);

  std::size_t n() const { return z_.size(); }
  const BitVector& z() const { return z_; }
  const BitVector& x() const { return x_; }
  Phase phase() const { return phase_; }
  /// 'I', 'X', 'Y' or 'Z'.
  char factor(std::size_t qubit) const;

  bool is_identity() const { return !z_.any() && !x_.any(); }
  bool is_hermitian() const { return is_real(phase_); }

  PauliOperator with_phase(Phase p) const { return {z_, x_, p}; }
  PauliOperator negated() const { return with_phase(phase_ * Phase::kMinusOne); }

  /// Sign prefix then factors; '+' is omitted. Imaginary phases render as
  /// "+i"/"-i" prefixes, which `parse` rejects.
  std::string to_string() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
  friend auto operator<=>(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVector z_;
  BitVector x_;
  Phase phase_ = Phase::kPlusOne;
};

/// B(M) = (u, v) with the phase dropped.
std::pair<BitVector, BitVector> to_binary(const PauliOperator& op);
PauliOperator from_binary(const BitVector& u, const BitVector& v, Phase phase);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  return multiply(a, b);
}

/// Symplectic inner product test: u_a.v_b + v_a.u_b == 0 (mod 2).
bool commutes(const PauliOperator& a, const PauliOperator& b);

IndexSet support(const PauliOperator& op);

/// Tensor factors at the positions in `omega` (ascending), phase preserved.
PauliOperator restrict(const PauliOperator& op, const IndexSet& omega);

/// Row i has its single nonzero entry at column i xor v.
ComplexMatrix dense_matrix(const PauliOperator& op, const DenseCaps& caps = {});

/// Value of the nonzero entry of row `row` of the dense matrix; the column
/// is `row ^ x().to_index()`.
Complex row_entry(const PauliOperator& op, std::uint64_t row);

}  // namespace stabdet

#endif  // STABDET_PAULI_HPP_
