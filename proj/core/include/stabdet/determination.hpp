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

#ifndef STABDET_DETERMINATION_HPP_
#define STABDET_DETERMINATION_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabdet/dense.hpp"
#include "stabdet/graph_state.hpp"
#include "stabdet/stabilizer.hpp"

namespace stabdet {

/// Reduced density matrices keyed by their (sorted, nonempty) subsystem.
/// Matrices are stored as given; `problems()` reports entries that are not
/// valid density matrices, and the forcing chains decide what to do with
/// them.
class RdmConstraintSet {
 public:
  RdmConstraintSet() = default;
  explicit RdmConstraintSet(std::size_t n) : n_(n) {}

  /// Throws if omega is empty, out of range or the dimension is not 2^|omega|.
  void add(IndexSet omega, ComplexMatrix rho);

  /// Marginals of `rho` (an n-qubit operator) on each subsystem.
  static RdmConstraintSet from_state(const ComplexMatrix& rho, const std::vector<IndexSet>& omegas);

  std::size_t n() const { return n_; }
  std::size_t size() const { return constraints_.size(); }
  bool contains(const IndexSet& omega) const { return constraints_.count(omega) != 0; }
  const ComplexMatrix& at(const IndexSet& omega) const { return constraints_.at(omega); }
  const std::map<IndexSet, ComplexMatrix>& constraints() const { return constraints_; }
  std::vector<IndexSet> subsystems() const;

  /// Human-readable list of density-matrix violations (empty when all pass).
  std::vector<std::string> problems(double tol = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::map<IndexSet, ComplexMatrix> constraints_;
};

enum class ReconstructionStatus { kDetermined, kInconsistent, kUnderdetermined };
const char* to_string(ReconstructionStatus status);

/// Rule that pinned an amplitude or a matrix entry.
enum class ForcingRule {
  kNormalization,     // pure: |a_0| from the norm, a_0 real positive
  kBasisChain,        // pure: a_j from a_(j - r_k) by a sign relation
  kDiagonal,          // mixed: b_rr equal along translations, then trace 1
  kTranslation,       // mixed: b_(r, r+r_s) from the saturated translation sum
  kZeroRowMinor,      // mixed: b_(0, j) from a 3x3 minor on {0, j - r_k, j}
  kCompletionMinor,   // mixed: b_(i, j) from a 3x3 minor on {0, i, j}
};
const char* to_string(ForcingRule rule);

struct ForcingStep {
  std::uint64_t row = 0;
  std::uint64_t col = 0;  // equals row for amplitudes and diagonal entries
  ForcingRule rule = ForcingRule::kNormalization;
  /// Real parameters pinned by this step: 1 for amplitudes (up to the fixed
  /// global phase) and diagonal entries, 2 for an off-diagonal entry.
  int parameters = 1;
  /// Generator indices whose translations were used, in application order.
  std::vector<std::size_t> via;
};

struct ReconstructionReport {
  ReconstructionStatus status = ReconstructionStatus::kUnderdetermined;
  std::optional<ComplexVector> state;          // pure chain
  std::optional<ComplexMatrix> density;        // mixed chain
  std::vector<ForcingStep> log;
  /// Largest deviation between the reconstruction's marginals and the input.
  double max_residual = 0.0;
  /// Largest entrywise deviation from the graph state (NaN if not computed).
  double graph_deviation = 0.0;
  /// Tag of the first violated rule; empty when Determined.
  std::string violated_rule;
  std::string message;

  bool determined() const { return status == ReconstructionStatus::kDetermined; }
  /// "status=<...> residual=<...>"
  std::string summary_line() const;
};

struct ForcingOptions {
  /// Absolute tolerance for every equality the chain relies on.
  double tolerance = 1e-9;
  DenseCaps caps{};
};

/// Reconstructs a pure state from generator-support marginals.
///
/// Each generator support omega_s must be covered by some constraint (a
/// superset is reduced by partial trace). Marginal values drive the
/// reconstruction; every value is also compared with the graph state's
/// prediction so that the first deviating rule is reported.
ReconstructionReport forcing_chain_pure(const Graph& g, const GeneratorSet& gens,
                                        const RdmConstraintSet& rdms,
                                        const ForcingOptions& options = {});

/// Reconstructs an arbitrary (possibly mixed) state from the same data, using
/// only the marginals, trace one and non-negativity of principal minors.
ReconstructionReport forcing_chain_mixed(const Graph& g, const GeneratorSet& gens,
                                         const RdmConstraintSet& rdms,
                                         const ForcingOptions& options = {});

/// Orthonormal (Hilbert-Schmidt) basis of traceless Hermitian operators whose
/// marginals on every listed subsystem vanish.
///
/// A Pauli string P has Tr_(complement of omega) P = 0 unless supp(P) lies in
/// omega, so the space is spanned by P / sqrt(2^n) over the non-identity
/// Paulis not supported inside any omega.
class KernelBasis {
 public:
  KernelBasis(std::size_t n, std::vector<PauliOperator> paulis)
      : n_(n), paulis_(std::move(paulis)) {}

  std::size_t n() const { return n_; }
  std::size_t dimension() const { return paulis_.size(); }
  const std::vector<PauliOperator>& paulis() const { return paulis_; }
  ComplexMatrix element(std::size_t k) const;
  /// Hilbert-Schmidt distance from `delta` to the span of the basis.
  double distance_to_span(const ComplexMatrix& delta) const;

 private:
  std::size_t n_;
  std::vector<PauliOperator> paulis_;
};

inline constexpr std::size_t kKernelQubitCap = 6;

KernelBasis rdm_kernel(std::size_t n, const std::vector<IndexSet>& omegas);

/// True when no other stabilizer state on n <= 3 qubits reproduces every
/// marginal of the pure `target` on `omegas` within `tol`.
bool uniqueness_by_enumeration(const ComplexMatrix& target, const std::vector<IndexSet>& omegas,
                               double tol = 1e-9);
/// Same scan with a precomputed state list.
bool uniqueness_by_enumeration(const ComplexMatrix& target, const std::vector<IndexSet>& omegas,
                               const std::vector<ComplexMatrix>& candidates, double tol = 1e-9);

struct MarginalComparison {
  IndexSet omega;
  double max_deviation = 0.0;
  bool agrees = false;
};

struct CounterexampleReport {
  ComplexMatrix graph_state;
  ComplexMatrix impostor;
  double trace_distance = 0.0;
  bool states_differ = false;                      // trace distance > 0.1
  std::vector<MarginalComparison> listed_marginals;  // the non-determining family
  bool listed_marginals_agree = false;             // all deviations < 1e-12
  std::vector<MarginalComparison> generator_supports;  // the determining family
  std::vector<IndexSet> distinguishing_supports;   // supports where they differ
  ReconstructionReport full_support_check;         // mixed chain on rho_G
  bool full_support_determined = false;

  bool all_hold() const { return states_differ && listed_marginals_agree && full_support_determined; }
};

/// Four-qubit path graph against the mixed state stabilized by three of its
/// four generators (the one supported on {1,2,3} removed).
CounterexampleReport verify_counterexample();

/// Constraint file: blocks of "omega: i,j,k" followed by a "dim=" grid.
RdmConstraintSet read_constraint_file(std::istream& is, std::size_t n);
void write_constraint_file(std::ostream& os, const RdmConstraintSet& rdms);

}  // namespace stabdet

#endif  // STABDET_DETERMINATION_HPP_
