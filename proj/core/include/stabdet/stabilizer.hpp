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

#ifndef STABDET_STABILIZER_HPP_
#define STABDET_STABILIZER_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "stabdet/dense.hpp"
#include "stabdet/f2.hpp"
#include "stabdet/pauli.hpp"

namespace stabdet {

/// Ordered list of l <= n Pauli operators on n qubits. Construction only
/// checks sizes; use `validate` for the stabilizer conditions.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t n) : n_(n) {}
  GeneratorSet(std::size_t n, std::vector<PauliOperator> generators);

  /// Convenience: every string must have the same length.
  static GeneratorSet parse(const std::vector<std::string>& paulis);

  std::size_t n() const { return n_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const PauliOperator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  auto begin() const { return generators_.begin(); }
  auto end() const { return generators_.end(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> generators_;
};

/// 2n x l matrix whose column s is B(M_s): S_z on top, S_x below.
F2Matrix generator_matrix(const GeneratorSet& gens);
F2Matrix z_block(const GeneratorSet& gens);
F2Matrix x_block(const GeneratorSet& gens);

struct ValidationReport {
  bool commuting = true;
  bool independent = true;
  bool hermitian = true;
  bool size_ok = true;  // l <= n
  std::vector<std::string> problems;

  /// Commuting, Hermitian with +-1 phases and F2-independent generators
  /// generate a group without -I: a product equal to +-I would need an empty
  /// binary combination, i.e. the identity product, whose phase is +1.
  bool valid() const { return commuting && independent && hermitian && size_ok; }
};

ValidationReport validate(const GeneratorSet& gens);

/// Throws std::invalid_argument listing the problems when `gens` is invalid.
void require_valid(const GeneratorSet& gens);

/// Largest generator count accepted by `enumerate_group`.
inline constexpr std::size_t kGroupEnumerationCap = 20;

/// All 2^l group elements with exact phases. Elements are visited in
/// Gray-code order of the exponent vector; callers should compare as sets.
std::vector<PauliOperator> enumerate_group(const GeneratorSet& gens);

/// True when `op`, phase included, belongs to the group generated by `gens`.
bool group_contains(const GeneratorSet& gens, const PauliOperator& op);

/// 2^-n times the sum of all group elements: the projector for l = n, the
/// rank 2^(n-l) maximally mixed state on the code space otherwise.
ComplexMatrix density_matrix(const GeneratorSet& gens, const DenseCaps& caps = {});

/// 2^-|omega| times the sum of restrictions of the group elements supported
/// inside omega.
ComplexMatrix stabilizer_rdm(const GeneratorSet& gens, const IndexSet& omega,
                             const DenseCaps& caps = {});

/// Generator j of the result is the product over i of gens[i]^R(i, j).
GeneratorSet recombine_generators(const GeneratorSet& gens, const F2Matrix& recombination);

/// Generator indices kept by the minimal-support rule: s is dropped when its
/// support lies inside another generator's support; among equal supports the
/// lowest index is kept.
std::vector<std::size_t> minimal_support_indices(const GeneratorSet& gens);
std::vector<IndexSet> minimal_support_set(const GeneratorSet& gens);

/// Every distinct pure stabilizer state on n <= 3 qubits, as projectors.
std::vector<ComplexMatrix> enumerate_stabilizer_states(std::size_t n);

/// Generator file: first line n, then one Pauli string per line.
GeneratorSet read_generator_file(std::istream& is);
void write_generator_file(std::ostream& os, const GeneratorSet& gens);

}  // namespace stabdet

#endif  // STABDET_STABILIZER_HPP_
