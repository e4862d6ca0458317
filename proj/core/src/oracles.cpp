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

#include <cmath>
#include <stdexcept>

#include "stabdet/determination.hpp"
#include "stabdet/errors.hpp"

namespace stabdet {

ComplexMatrix KernelBasis::element(std::size_t k) const {
  return dense_matrix(paulis_.at(k)) / std::sqrt(std::ldexp(1.0, static_cast<int>(n_)));
}

double KernelBasis::distance_to_span(const ComplexMatrix& delta) const {
  const std::uint64_t dim = std::uint64_t{1} << n_;
  if (static_cast<std::uint64_t>(delta.rows()) != dim || delta.rows() != delta.cols()) {
    throw std::invalid_argument("operator dimension does not match the kernel's qubit count");
  }
  ComplexMatrix residual = delta;
  const double norm = static_cast<double>(dim);
  for (const auto& p : paulis_) {
    const std::uint64_t shift = p.x().to_index();
    // <P, delta>_HS = Tr(P^dagger delta); P is Hermitian.
    Complex overlap = 0.0;
    for (std::uint64_t row = 0; row < dim; ++row) {
      overlap += row_entry(p, row) * delta(static_cast<Eigen::Index>(row ^ shift), static_cast<Eigen::Index>(row));
    }
    const Complex coeff = overlap / norm;
    for (std::uint64_t row = 0; row < dim; ++row) {
      residual(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row ^ shift)) -= coeff * row_entry(p, row);
    }
  }
  return residual.norm();
}

KernelBasis rdm_kernel(std::size_t n, const std::vector<IndexSet>& omegas) {
  if (n == 0 || n > kKernelQubitCap) {
    throw CapExceeded("rdm_kernel supports 1 <= n <= " + std::to_string(kKernelQubitCap));
  }
  for (const auto& omega : omegas) {
    if (normalize(omega) != omega || (!omega.empty() && omega.back() >= n)) {
      throw std::invalid_argument("invalid subsystem {" + format_index_set(omega) + "}");
    }
  }
  std::vector<PauliOperator> paulis;
  const std::uint64_t codes = std::uint64_t{1} << (2 * n);
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t code = 1; code < codes; ++code) {
    PauliOperator p(BitVector::from_index(n, code >> n), BitVector::from_index(n, code & low));
    const IndexSet supp = support(p);
    bool visible = false;
    for (const auto& omega : omegas) {
      if (is_subset(supp, omega)) {
        visible = true;
        break;
      }
    }
    if (!visible) paulis.push_back(std::move(p));
  }
  return {n, std::move(paulis)};
}

bool uniqueness_by_enumeration(const ComplexMatrix& target, const std::vector<IndexSet>& omegas,
                               const std::vector<ComplexMatrix>& candidates, double tol) {
  const auto check = check_density_matrix(target, 1e-9);
  if (!check.ok() || numerical_rank(target) != 1) {
    throw std::invalid_argument("uniqueness scan needs a pure target state");
  }
  std::vector<ComplexMatrix> target_marginals;
  for (const auto& omega : omegas) target_marginals.push_back(dense_partial_trace(target, omega));

  for (const auto& candidate : candidates) {
    if (candidate.rows() != target.rows()) throw std::invalid_argument("candidate dimension mismatch");
    if (max_abs_diff(candidate, target) <= tol) continue;
    bool all_match = true;
    for (std::size_t k = 0; k < omegas.size() && all_match; ++k) {
      all_match = max_abs_diff(dense_partial_trace(candidate, omegas[k]), target_marginals[k]) <= tol;
    }
    if (all_match) return false;
  }
  return true;
}

bool uniqueness_by_enumeration(const ComplexMatrix& target, const std::vector<IndexSet>& omegas, double tol) {
  const std::size_t n = qubit_count(static_cast<std::size_t>(target.rows()));
  if (n > 3) throw CapExceeded("uniqueness scan supports n <= 3");
  return uniqueness_by_enumeration(target, omegas, enumerate_stabilizer_states(n), tol);
}

namespace {

std::vector<MarginalComparison> compare_marginals(const ComplexMatrix& a, const ComplexMatrix& b,
                                                  const std::vector<IndexSet>& omegas, double tol) {
  std::vector<MarginalComparison> out;
  for (const auto& omega : omegas) {
    MarginalComparison cmp;
    cmp.omega = omega;
    cmp.max_deviation = max_abs_diff(dense_partial_trace(a, omega), dense_partial_trace(b, omega));
    cmp.agrees = cmp.max_deviation < tol;
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace

CounterexampleReport verify_counterexample() {
  constexpr double kMarginalTol = 1e-12;
  constexpr double kDistanceThreshold = 0.1;

  const Graph g = Graph::path(4);
  const GeneratorSet full = canonical_generators(g);
  const GeneratorSet partial = GeneratorSet::parse({"XZII", "ZXZI", "IIZX"});

  CounterexampleReport report;
  report.graph_state = density_matrix(full);
  report.impostor = density_matrix(partial);
  report.trace_distance = trace_distance(report.graph_state, report.impostor);
  report.states_differ = report.trace_distance > kDistanceThreshold;

  const std::vector<IndexSet> listed = {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}};
  report.listed_marginals = compare_marginals(report.graph_state, report.impostor, listed, kMarginalTol);
  report.listed_marginals_agree = true;
  for (const auto& cmp : report.listed_marginals) report.listed_marginals_agree &= cmp.agrees;

  std::vector<IndexSet> supports;
  for (const auto& m : full) supports.push_back(support(m));
  report.generator_supports = compare_marginals(report.graph_state, report.impostor, supports, kMarginalTol);
  for (const auto& cmp : report.generator_supports) {
    if (!cmp.agrees) report.distinguishing_supports.push_back(cmp.omega);
  }

  report.full_support_check =
      forcing_chain_mixed(g, full, RdmConstraintSet::from_state(report.graph_state, supports));
  report.full_support_determined = report.full_support_check.determined();
  return report;
}

}  // namespace stabdet
