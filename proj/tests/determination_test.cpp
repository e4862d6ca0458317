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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dense_oracles.hpp"
#include "random_states.hpp"
#include "stabdet/determination.hpp"
#include "stabdet/errors.hpp"

namespace stabdet {
namespace {

std::vector<IndexSet> supports_of(const GeneratorSet& gens) {
  std::vector<IndexSet> out;
  for (const auto& m : gens) out.push_back(support(m));
  return out;
}

RdmConstraintSet exact_rdms(const Graph& g, const GeneratorSet& gens) {
  return RdmConstraintSet::from_state(density_matrix(canonical_generators(g)), supports_of(gens));
}

ComplexMatrix reference_graph_density(const Graph& g) {
  const std::uint64_t dim = std::uint64_t{1} << g.n();
  ComplexMatrix rho(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      const bool sign = quadratic_form(g, i) != quadratic_form(g, j);
      rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (sign ? -1.0 : 1.0) / static_cast<double>(dim);
    }
  }
  return rho;
}

// Sum of parameters per entry pair; every (i <= j) pair appears once.
bool log_covers_all_parameters(const ReconstructionReport& r, std::size_t n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> seen;
  int total = 0;
  for (const auto& step : r.log) {
    const auto key = std::minmax(step.row, step.col);
    if (++seen[key] != 1) return false;
    if (step.parameters != (step.row == step.col ? 1 : 2)) return false;
    total += step.parameters;
  }
  return seen.size() == dim * (dim + 1) / 2 && static_cast<std::uint64_t>(total) == dim * dim;
}

TEST(ForcingChainPure, PathGraphFullSupports) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto report = forcing_chain_pure(g, gens, exact_rdms(g, gens));
  ASSERT_TRUE(report.determined()) << report.message;
  ASSERT_TRUE(report.state.has_value());
  EXPECT_LT(max_abs_diff(*report.state, state_vector(g)), 1e-12);
  EXPECT_EQ(report.log.size(), 16u);
  EXPECT_EQ(report.log.front().rule, ForcingRule::kNormalization);
  for (std::size_t k = 1; k < report.log.size(); ++k) EXPECT_EQ(report.log[k].rule, ForcingRule::kBasisChain);
  for (Eigen::Index i = 0; i < 16; ++i) EXPECT_NEAR(std::abs((*report.state)(i)), 0.25, 1e-15);
}

TEST(ForcingChainPure, MinimalSupportsViaPartialTrace) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0, 1, 2}, {1, 2, 3}});
  const auto report = forcing_chain_pure(g, gens, rdms);
  ASSERT_TRUE(report.determined()) << report.message;
  EXPECT_LT(max_abs_diff(*report.state, state_vector(g)), 1e-12);
}

TEST(ForcingChainPure, EdgelessTwoQubits) {
  const Graph g(2);
  const auto gens = canonical_generators(g);
  const auto report = forcing_chain_pure(g, gens, exact_rdms(g, gens));
  ASSERT_TRUE(report.determined());
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(std::abs((*report.state)(i) - 0.5), 0.0, 1e-15);
}

TEST(ForcingChainPure, LogOrderFollowsExpansionWeight) {
  const Graph g = Graph::star(4, 1);
  const auto gens = canonical_generators(g);
  const auto report = forcing_chain_pure(g, gens, exact_rdms(g, gens));
  ASSERT_TRUE(report.determined());
  std::size_t last_weight = 0;
  for (const auto& step : report.log) {
    EXPECT_GE(step.via.size(), last_weight);
    last_weight = step.via.size();
    // Peeling strips the highest generator first.
    EXPECT_TRUE(std::is_sorted(step.via.rbegin(), step.via.rend()));
  }
}

TEST(ForcingChainPure, PerturbedDiagonalIsInconsistent) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  auto rdms = exact_rdms(g, gens);
  ComplexMatrix bad = rdms.at({0, 1, 2});
  bad(0, 0) += 0.01;
  rdms.add({0, 1, 2}, bad);
  const auto report = forcing_chain_pure(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kInconsistent);
  EXPECT_EQ(report.violated_rule, "diagonal-sum");
}

TEST(ForcingChainPure, FlippedSignIsInconsistent) {
  const Graph g = Graph::path(3);
  const auto gens = canonical_generators(g);
  auto rdms = exact_rdms(g, gens);
  const IndexSet omega{0, 1, 2};
  // Marginal of the state stabilized by -K_1 instead of K_1.
  const auto other = GeneratorSet::parse({"XZI", "-ZXZ", "IZX"});
  rdms.add(omega, density_matrix(other));
  const auto report = forcing_chain_pure(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kInconsistent);
  EXPECT_EQ(report.violated_rule, "sign-relation");
}

TEST(ForcingChainPure, MissingSupportIsUnderdetermined) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
  const auto report = forcing_chain_pure(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kUnderdetermined);
  EXPECT_EQ(report.violated_rule, "missing-marginal");
}

TEST(ForcingChainPure, PureZGeneratorIsUnsupported) {
  const Graph g(2);
  const auto gens = GeneratorSet::parse({"XI", "IZ"});
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0}, {1}});
  for (const auto& report : {forcing_chain_pure(g, gens, rdms), forcing_chain_mixed(g, gens, rdms)}) {
    EXPECT_EQ(report.status, ReconstructionStatus::kUnderdetermined);
    EXPECT_EQ(report.violated_rule, "unsupported");
  }
}

TEST(ForcingChainPure, GeneratorOutsideGraphGroupThrows) {
  const Graph g = Graph::path(2);
  const auto gens = GeneratorSet::parse({"XI", "IX"});
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0}, {1}});
  EXPECT_THROW(forcing_chain_pure(g, gens, rdms), std::invalid_argument);
}

TEST(ForcingChainPure, PartialGeneratorSetIsUnderdetermined) {
  const Graph g = Graph::path(3);
  const auto full = canonical_generators(g);
  const GeneratorSet gens(3, {full[0], full[1]});
  const auto report = forcing_chain_pure(g, gens, exact_rdms(g, gens));
  EXPECT_EQ(report.status, ReconstructionStatus::kUnderdetermined);
  EXPECT_EQ(report.violated_rule, "basis");
}

TEST(ForcingChainMixed, PathGraphFullSupports) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto report = forcing_chain_mixed(g, gens, exact_rdms(g, gens));
  ASSERT_TRUE(report.determined()) << report.message;
  ASSERT_TRUE(report.density.has_value());
  EXPECT_LT(max_abs_diff(*report.density, reference_graph_density(g)), 1e-12);
  EXPECT_TRUE(log_covers_all_parameters(report, 4));
  EXPECT_LT(report.max_residual, 1e-12);
}

TEST(ForcingChainMixed, MinimalSupportsSuffice) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0, 1, 2}, {1, 2, 3}});
  const auto report = forcing_chain_mixed(g, gens, rdms);
  ASSERT_TRUE(report.determined()) << report.message;
  EXPECT_LT(max_abs_diff(*report.density, reference_graph_density(g)), 1e-12);
}

TEST(ForcingChainMixed, WholeSystemConstraint) {
  const Graph g = Graph::star(3, 0);
  const auto gens = canonical_generators(g);
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0, 1, 2}});
  const auto report = forcing_chain_mixed(g, gens, rdms);
  ASSERT_TRUE(report.determined()) << report.message;
  EXPECT_LT(max_abs_diff(*report.density, reference_graph_density(g)), 1e-12);
}

TEST(ForcingChainMixed, RuleSequence) {
  const Graph g = Graph::path(3);
  const auto gens = canonical_generators(g);
  const auto report = forcing_chain_mixed(g, gens, exact_rdms(g, gens));
  ASSERT_TRUE(report.determined());
  std::map<ForcingRule, int> count;
  for (const auto& step : report.log) ++count[step.rule];
  EXPECT_EQ(count[ForcingRule::kDiagonal], 8);
  EXPECT_EQ(count[ForcingRule::kTranslation] + count[ForcingRule::kZeroRowMinor] +
                count[ForcingRule::kCompletionMinor],
            28);
  // Every zero-row entry is pinned, by a translation (weight one) or a minor.
  std::set<std::uint64_t> zero_row;
  for (const auto& step : report.log) {
    if (step.row == 0 && step.col != 0) zero_row.insert(step.col);
  }
  EXPECT_EQ(zero_row.size(), 7u);
}

TEST(ForcingChainMixed, ImpostorMarginalsFailOnDistinguishingSupport) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto impostor = density_matrix(GeneratorSet::parse({"XZII", "ZXZI", "IIZX"}));
  const auto rdms = RdmConstraintSet::from_state(impostor, supports_of(gens));
  const auto report = forcing_chain_mixed(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kInconsistent);
  EXPECT_FALSE(report.violated_rule.empty());
}

TEST(ForcingChainMixed, PerturbedDiagonalIsInconsistent) {
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  auto rdms = exact_rdms(g, gens);
  ComplexMatrix bad = rdms.at({2, 3});
  bad(1, 1) += 0.01;
  rdms.add({2, 3}, bad);
  const auto report = forcing_chain_mixed(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kInconsistent);
  EXPECT_EQ(report.violated_rule, "diagonal-sum");
}

TEST(ForcingChainMixed, ShrunkOffDiagonalViolatesMinor) {
  // Scaling a saturated coherence below its bound keeps the marginal PSD but
  // breaks the equality the chain needs.
  const Graph g = Graph::path(2);
  const auto gens = canonical_generators(g);
  auto rdms = exact_rdms(g, gens);
  ComplexMatrix m = rdms.at({0, 1});
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (i != j) m(i, j) *= 0.9;
    }
  }
  rdms.add({0, 1}, m);
  const auto report = forcing_chain_mixed(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kInconsistent);
  EXPECT_EQ(report.violated_rule, "cauchy-schwarz");
}

TEST(ForcingChainMixed, OversizedOffDiagonalIsMinorViolation) {
  const Graph g = Graph::path(2);
  const auto gens = canonical_generators(g);
  auto rdms = exact_rdms(g, gens);
  ComplexMatrix m = rdms.at({0, 1});
  m(0, 2) *= 1.5;
  m(2, 0) *= 1.5;
  rdms.add({0, 1}, m);
  const auto report = forcing_chain_mixed(g, gens, rdms);
  EXPECT_EQ(report.status, ReconstructionStatus::kInconsistent);
  EXPECT_EQ(report.violated_rule, "minor-2x2");
}

TEST(ForcingChain, RecombinedGeneratorsStillDetermine) {
  std::mt19937_64 rng(7);
  const Graph g = Graph::path(4);
  const auto base = canonical_generators(g);
  for (int trial = 0; trial < 10; ++trial) {
    const auto gens = recombine_generators(base, testing::random_invertible(4, rng));
    const auto rdms = exact_rdms(g, gens);
    const auto pure = forcing_chain_pure(g, gens, rdms);
    const auto mixed = forcing_chain_mixed(g, gens, rdms);
    ASSERT_TRUE(pure.determined()) << pure.message;
    ASSERT_TRUE(mixed.determined()) << mixed.message;
    EXPECT_LT(max_abs_diff(*pure.state, state_vector(g)), 1e-12);
    EXPECT_LT(max_abs_diff(*mixed.density, reference_graph_density(g)), 1e-12);
  }
}

TEST(ForcingChain, RandomGraphsBothChains) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Graph g = testing::random_graph(n, rng);
    const auto gens = canonical_generators(g);
    const auto rdms = exact_rdms(g, gens);
    const auto pure = forcing_chain_pure(g, gens, rdms);
    const auto mixed = forcing_chain_mixed(g, gens, rdms);
    ASSERT_TRUE(pure.determined()) << pure.message;
    ASSERT_TRUE(mixed.determined()) << mixed.message;
    EXPECT_LT(max_abs_diff(*pure.state, state_vector(g)), 1e-12);
    EXPECT_LT(max_abs_diff(*mixed.density, reference_graph_density(g)), 1e-12);
    EXPECT_TRUE(log_covers_all_parameters(mixed, n));
  }
}

TEST(ForcingChain, NegativeControlStrictSubsetSupport) {
  // Replacing omega_s by a strict subset leaves supp(M_s) uncovered.
  const Graph g = Graph::path(4);
  const auto gens = canonical_generators(g);
  const auto rho = density_matrix(gens);
  for (std::size_t s = 0; s < 4; ++s) {
    auto omegas = supports_of(gens);
    omegas[s].pop_back();
    if (omegas[s].empty()) continue;
    bool covered = false;
    for (std::size_t t = 0; t < 4; ++t) covered |= (t != s && is_subset(support(gens[s]), omegas[t]));
    if (covered) continue;
    const auto rdms = RdmConstraintSet::from_state(rho, omegas);
    EXPECT_FALSE(forcing_chain_pure(g, gens, rdms).determined()) << s;
    EXPECT_FALSE(forcing_chain_mixed(g, gens, rdms).determined()) << s;
  }
}

TEST(ForcingChain, SummaryLine) {
  const Graph g = Graph::path(2);
  const auto gens = canonical_generators(g);
  const auto report = forcing_chain_mixed(g, gens, exact_rdms(g, gens));
  EXPECT_EQ(report.summary_line().rfind("status=Determined residual=", 0), 0u);
}

TEST(RdmConstraintSet, RejectsBadInput) {
  RdmConstraintSet set(3);
  EXPECT_THROW(set.add({}, ComplexMatrix::Identity(1, 1)), std::invalid_argument);
  EXPECT_THROW(set.add({1, 0}, ComplexMatrix::Identity(4, 4) / 4.0), std::invalid_argument);
  EXPECT_THROW(set.add({3}, ComplexMatrix::Identity(2, 2) / 2.0), std::out_of_range);
  EXPECT_THROW(set.add({0}, ComplexMatrix::Identity(4, 4) / 4.0), std::invalid_argument);
  set.add({0}, ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(set.problems().size(), 1u);
}

TEST(RdmConstraintSet, FileRoundTrip) {
  const auto gens = GeneratorSet::parse({"XXX", "ZZI", "IZZ"});
  const auto rdms = RdmConstraintSet::from_state(density_matrix(gens), {{0, 1}, {1, 2}, {0, 1, 2}});
  std::stringstream ss;
  write_constraint_file(ss, rdms);
  const auto back = read_constraint_file(ss, 3);
  ASSERT_EQ(back.size(), 3u);
  for (const auto& [omega, rho] : rdms.constraints()) EXPECT_LT(max_abs_diff(back.at(omega), rho), 1e-12);
}

TEST(RdmConstraintSet, ParseErrorsCarryLineNumbers) {
  const std::string block = "omega: 0\ndim=2\n0.5+0j 0+0j\n0+0j 0.5+0j\n";
  std::istringstream dup(block + block);
  try {
    read_constraint_file(dup, 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
  std::istringstream range("# comment\nomega: 0,4\n");
  try {
    read_constraint_file(range, 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream header("rho: 0\n");
  EXPECT_THROW(read_constraint_file(header, 2), ParseError);
}

// Rank-nullity oracle: the map Delta -> (tr Delta, marginals on every omega)
// assembled explicitly as a real matrix over the Hermitian coordinates.
std::size_t kernel_dimension_by_rank(std::size_t n, const std::vector<IndexSet>& omegas) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      basis.push_back(e);
      if (i != j) {
        ComplexMatrix f = ComplexMatrix::Zero(dim, dim);
        f(i, j) = Complex(0, 1);
        f(j, i) = Complex(0, -1);
        basis.push_back(f);
      }
    }
  }
  std::vector<std::vector<double>> cols;
  for (const auto& b : basis) {
    std::vector<double> col{b.trace().real()};
    for (const auto& omega : omegas) {
      const ComplexMatrix m = testing::reference_partial_trace(b, n, omega);
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          col.push_back(m(r, c).real());
          col.push_back(m(r, c).imag());
        }
      }
    }
    cols.push_back(col);
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(cols[0].size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < cols[c].size(); ++r) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cols[c][r];
  }
  Eigen::FullPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-10);
  return basis.size() - static_cast<std::size_t>(qr.rank());
}

TEST(RdmKernel, SingleQubitIsTrivial) { EXPECT_EQ(rdm_kernel(1, {{0}}).dimension(), 0u); }

TEST(RdmKernel, DimensionMatchesRankNullity) {
  const auto gens = canonical_generators(Graph::path(4));
  const std::vector<std::vector<IndexSet>> families = {
      supports_of(gens), {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}, {{0}, {1}, {2}, {3}}, {{0, 1, 2, 3}}};
  for (const auto& omegas : families) {
    EXPECT_EQ(rdm_kernel(4, omegas).dimension(), kernel_dimension_by_rank(4, omegas));
  }
  EXPECT_EQ(rdm_kernel(2, {{0}}).dimension(), kernel_dimension_by_rank(2, {{0}}));
  EXPECT_EQ(rdm_kernel(3, {{0, 1}, {1, 2}}).dimension(), kernel_dimension_by_rank(3, {{0, 1}, {1, 2}}));
}

TEST(RdmKernel, ElementsAreOrthonormalAndInvisible) {
  const std::vector<IndexSet> omegas = {{0, 1}, {1, 2}};
  const auto k = rdm_kernel(3, omegas);
  ASSERT_GT(k.dimension(), 0u);
  for (std::size_t a = 0; a < k.dimension(); ++a) {
    const ComplexMatrix ea = k.element(a);
    EXPECT_LT((ea - ea.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(std::abs(ea.trace()), 1e-12);
    for (const auto& omega : omegas) {
      EXPECT_LT(testing::reference_partial_trace(ea, 3, omega).cwiseAbs().maxCoeff(), 1e-12);
    }
    for (std::size_t b = 0; b < k.dimension(); ++b) {
      const Complex ip = (ea.adjoint() * k.element(b)).trace();
      EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
}

TEST(RdmKernel, CounterexampleDifferenceLiesInKernel) {
  const auto rho_g = density_matrix(canonical_generators(Graph::path(4)));
  const auto impostor = density_matrix(GeneratorSet::parse({"XZII", "ZXZI", "IIZX"}));
  const ComplexMatrix delta = rho_g - impostor;
  const auto listed = rdm_kernel(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
  EXPECT_GE(listed.dimension(), 1u);
  EXPECT_LT(listed.distance_to_span(delta), 1e-12);
  const auto full = rdm_kernel(4, supports_of(canonical_generators(Graph::path(4))));
  EXPECT_GT(full.distance_to_span(delta), 0.1);
}

TEST(RdmKernel, CapAndInputChecks) {
  EXPECT_THROW(rdm_kernel(7, {}), CapExceeded);
  EXPECT_THROW(rdm_kernel(3, {{2, 1}}), std::invalid_argument);
  EXPECT_THROW(rdm_kernel(3, {{3}}), std::invalid_argument);
}

TEST(Uniqueness, StarGraphCanonicalSupports) {
  const auto gens = canonical_generators(Graph::star(3, 0));
  EXPECT_TRUE(uniqueness_by_enumeration(density_matrix(gens), supports_of(gens)));
}

TEST(Uniqueness, EdgeGraphSingleQubitMarginalsAreShared) {
  const auto gens = canonical_generators(Graph::path(2));
  EXPECT_FALSE(uniqueness_by_enumeration(density_matrix(gens), {{0}, {1}}));
}

TEST(Uniqueness, SingleQubitZeroState) {
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  EXPECT_TRUE(uniqueness_by_enumeration(zero, {{0}}));
}

TEST(Uniqueness, RejectsMixedTargetAndLargeN) {
  EXPECT_THROW(uniqueness_by_enumeration(ComplexMatrix::Identity(2, 2) / 2.0, {{0}}), std::invalid_argument);
  const auto rho4 = density_matrix(canonical_generators(Graph::path(4)));
  EXPECT_THROW(uniqueness_by_enumeration(rho4, {{0}}), CapExceeded);
}

TEST(Uniqueness, AgreesWithForcingChainsAtSmallN) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& g : testing::all_graphs(n)) {
      const auto gens = canonical_generators(g);
      const auto rdms = exact_rdms(g, gens);
      ASSERT_TRUE(forcing_chain_mixed(g, gens, rdms).determined());
      EXPECT_TRUE(uniqueness_by_enumeration(density_matrix(gens), supports_of(gens)));
    }
  }
}

TEST(Counterexample, AllFindingsHold) {
  const auto report = verify_counterexample();
  EXPECT_TRUE(report.states_differ);
  EXPECT_NEAR(report.trace_distance, 0.5, 1e-12);
  EXPECT_TRUE(report.listed_marginals_agree);
  ASSERT_EQ(report.listed_marginals.size(), 4u);
  for (const auto& cmp : report.listed_marginals) EXPECT_LT(cmp.max_deviation, 1e-12);
  EXPECT_TRUE(report.full_support_determined);
  EXPECT_TRUE(report.all_hold());
  const std::vector<IndexSet> expected_distinguishing = {{1, 2, 3}};
  EXPECT_EQ(report.distinguishing_supports, expected_distinguishing);
}

TEST(Counterexample, TraceDistanceByEigenvalues) {
  const auto report = verify_counterexample();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(report.graph_state - report.impostor);
  EXPECT_NEAR(0.5 * es.eigenvalues().cwiseAbs().sum(), report.trace_distance, 1e-12);
}

}  // namespace
}  // namespace stabdet
