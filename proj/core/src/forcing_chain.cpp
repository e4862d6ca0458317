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

// Forcing chains: reconstruct a graph state from the marginals on the
// supports of a generating set.
//
// Notation: generator s has support omega_s and x-part r_s (a basis index).
// Because {r_s} is a basis of F2^n, every index j has a unique expansion
// j = sum of r_s over a mask of generators. Entries are forced in increasing
// weight of that mask, peeling the highest generator index first.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "stabdet/determination.hpp"

namespace stabdet {

const char* to_string(ReconstructionStatus status) {
  switch (status) {
    case ReconstructionStatus::kDetermined:
      return "Determined";
    case ReconstructionStatus::kInconsistent:
      return "Inconsistent";
    case ReconstructionStatus::kUnderdetermined:
      return "Underdetermined";
  }
  return "?";
}

const char* to_string(ForcingRule rule) {
  switch (rule) {
    case ForcingRule::kNormalization:
      return "normalization";
    case ForcingRule::kBasisChain:
      return "basis-chain";
    case ForcingRule::kDiagonal:
      return "diagonal";
    case ForcingRule::kTranslation:
      return "translation";
    case ForcingRule::kZeroRowMinor:
      return "zero-row-minor";
    case ForcingRule::kCompletionMinor:
      return "completion-minor";
  }
  return "?";
}

std::string ReconstructionReport::summary_line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", max_residual);
  return std::string("status=") + to_string(status) + " residual=" + buf;
}

namespace {

std::uint64_t local_index(std::uint64_t full, const IndexSet& omega, std::size_t n) {
  std::uint64_t local = 0;
  for (auto q : omega) local = (local << 1) | ((full >> (n - 1 - q)) & 1u);
  return local;
}

std::uint64_t full_index(std::uint64_t local, const IndexSet& omega, std::size_t n) {
  const std::size_t k = omega.size();
  std::uint64_t full = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if ((local >> (k - 1 - j)) & 1u) full |= std::uint64_t{1} << (n - 1 - omega[j]);
  }
  return full;
}

std::string index_pair(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

struct Translation {
  std::size_t generator = 0;
  IndexSet omega;
  std::uint64_t shift = 0;        // r_s over all qubits
  std::uint64_t local_shift = 0;  // r_s restricted to omega_s
  ComplexMatrix marginal;
  std::vector<Complex> phase;     // C / |C| per local row index
};

struct Failure {
  ReconstructionStatus status;
  std::string rule;
  std::string message;
};

struct Setup {
  std::size_t n = 0;
  std::uint64_t dim = 0;
  std::vector<Translation> translations;
  std::vector<std::uint64_t> expansion;  // generator mask per basis index
  std::vector<std::uint64_t> order;      // basis indices by mask weight
};

ReconstructionReport fail(ReconstructionReport report, const Failure& f) {
  report.status = f.status;
  report.violated_rule = f.rule;
  report.message = f.message;
  return report;
}

// Throws on malformed input. Generators without an x-part (not graph form)
// are reported rather than rejected.
std::optional<Failure> check_preconditions(const Graph& g, const GeneratorSet& gens,
                                           const RdmConstraintSet& rdms) {
  const std::size_t n = g.n();
  if (gens.n() != n || rdms.n() != n) throw std::invalid_argument("graph, generators and marginals disagree on n");
  require_valid(gens);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (!gens[s].x().any()) {
      return Failure{ReconstructionStatus::kUnderdetermined, "unsupported",
                     "generator " + std::to_string(s) + " (" + gens[s].to_string() +
                         ") has no x-part; reduce to graph form first"};
    }
  }
  const GeneratorSet graph_gens = canonical_generators(g);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (!group_contains(graph_gens, gens[s])) {
      throw std::invalid_argument("generator " + std::to_string(s) + " (" + gens[s].to_string() +
                                  ") is not in the graph state's stabilizer group");
    }
  }
  return std::nullopt;
}

// Marginal on omega from an exact constraint or the smallest covering one.
std::optional<ComplexMatrix> resolve_marginal(const RdmConstraintSet& rdms, const IndexSet& omega) {
  if (rdms.contains(omega)) return rdms.at(omega);
  const IndexSet* best = nullptr;
  for (const auto& [key, rho] : rdms.constraints()) {
    if (is_subset(omega, key) && (best == nullptr || key.size() < best->size())) best = &key;
  }
  if (best == nullptr) return std::nullopt;
  IndexSet positions;
  for (auto q : omega) {
    positions.push_back(static_cast<std::size_t>(std::lower_bound(best->begin(), best->end(), q) - best->begin()));
  }
  return dense_partial_trace(rdms.at(*best), positions);
}

std::optional<Failure> prepare(const Graph& g, const GeneratorSet& gens, const RdmConstraintSet& rdms,
                               Setup& setup) {
  const std::size_t n = g.n();
  setup.n = n;
  setup.dim = std::uint64_t{1} << n;
  std::vector<BitVector> shifts;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    Translation t;
    t.generator = s;
    t.omega = support(gens[s]);
    t.shift = gens[s].x().to_index();
    t.local_shift = local_index(t.shift, t.omega, n);
    auto marginal = resolve_marginal(rdms, t.omega);
    if (!marginal) {
      return Failure{ReconstructionStatus::kUnderdetermined, "missing-marginal",
                     "no constraint covers the support {" + format_index_set(t.omega) + "} of generator " +
                         std::to_string(s)};
    }
    t.marginal = std::move(*marginal);
    shifts.push_back(gens[s].x());
    setup.translations.push_back(std::move(t));
  }

  const F2Matrix basis = F2Matrix::from_columns(shifts);
  if (gens.size() != n || f2_rank(basis) != n) {
    return Failure{ReconstructionStatus::kUnderdetermined, "basis",
                   "translations of the generators do not span F2^n"};
  }
  // Expansion masks: linear, so combine the masks of the unit vectors.
  std::vector<std::uint64_t> unit_mask(n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto coeffs = f2_solve(basis, BitVector::unit(n, q));
    std::uint64_t mask = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if ((*coeffs)[s]) mask |= std::uint64_t{1} << s;
    }
    unit_mask[q] = mask;
  }
  setup.expansion.assign(setup.dim, 0);
  for (std::uint64_t j = 0; j < setup.dim; ++j) {
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if ((j >> (n - 1 - q)) & 1u) mask ^= unit_mask[q];
    }
    setup.expansion[j] = mask;
  }
  setup.order.resize(setup.dim);
  std::iota(setup.order.begin(), setup.order.end(), std::uint64_t{0});
  std::stable_sort(setup.order.begin(), setup.order.end(), [&](std::uint64_t a, std::uint64_t b) {
    return std::popcount(setup.expansion[a]) < std::popcount(setup.expansion[b]);
  });
  return std::nullopt;
}

enum class Chain { kPure, kMixed };

// Checks every generator marginal against the saturation conditions the chain
// relies on and against the graph state's values; records the phase of each
// translation entry.
std::optional<Failure> check_translations(const Graph& g, Setup& setup, Chain chain, double tol) {
  const std::size_t n = setup.n;
  for (auto& t : setup.translations) {
    const auto k = t.omega.size();
    const double expected_diag = std::ldexp(1.0, -static_cast<int>(k));
    const auto local_dim = static_cast<Eigen::Index>(std::uint64_t{1} << k);
    for (Eigen::Index i = 0; i < local_dim; ++i) {
      const Complex dii = t.marginal(i, i);
      if (std::abs(dii - Complex(expected_diag, 0.0)) > tol) {
        return Failure{ReconstructionStatus::kInconsistent, "diagonal-sum",
                       "marginal on {" + format_index_set(t.omega) + "} has diagonal entry " +
                           std::to_string(i) + " = " + format_complex(dii) + ", expected 2^-" +
                           std::to_string(k)};
      }
    }
  }
  for (auto& t : setup.translations) {
    const auto k = t.omega.size();
    const double scale = std::ldexp(1.0, -static_cast<int>(k));
    const std::uint64_t local_dim = std::uint64_t{1} << k;
    t.phase.assign(local_dim, Complex(0.0, 0.0));
    for (std::uint64_t i = 0; i < local_dim; ++i) {
      const std::uint64_t j = i ^ t.local_shift;
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      const Complex c = t.marginal(ii, jj);
      const double bound = std::sqrt(std::max(0.0, t.marginal(ii, ii).real()) *
                                     std::max(0.0, t.marginal(jj, jj).real()));
      const std::string where = "marginal on {" + format_index_set(t.omega) + "} entry " + index_pair(i, j);
      if (std::abs(c) > bound + tol) {
        // Only possible if the family is not a marginal of any density matrix.
        return Failure{ReconstructionStatus::kInconsistent,
                       chain == Chain::kMixed ? "minor-2x2" : "cauchy-schwarz",
                       where + " exceeds sqrt(b_ii b_jj): principal minor violation"};
      }
      if (std::abs(c) < bound - tol) {
        return Failure{ReconstructionStatus::kInconsistent, "cauchy-schwarz",
                       where + " does not saturate the Cauchy-Schwarz bound"};
      }
      const std::uint64_t full = full_index(i, t.omega, n);
      const bool odd = quadratic_form(g, full) != quadratic_form(g, full ^ t.shift);
      const Complex expected(odd ? -scale : scale, 0.0);
      if (std::abs(c - expected) > tol) {
        return Failure{ReconstructionStatus::kInconsistent,
                       chain == Chain::kMixed ? "translation-sum" : "sign-relation",
                       where + " = " + format_complex(c) + ", graph state has " + format_complex(expected)};
      }
      t.phase[i] = c / std::abs(c);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> peel_order(std::uint64_t mask) {
  std::vector<std::size_t> via;
  while (mask != 0) {
    const auto top = static_cast<std::size_t>(63 - std::countl_zero(mask));
    via.push_back(top);
    mask &= ~(std::uint64_t{1} << top);
  }
  return via;
}

std::size_t highest_generator(std::uint64_t mask) {
  return static_cast<std::size_t>(63 - std::countl_zero(mask));
}

// Marginal of a pure state: sum over the traced register of a_(i t) a*_(j t).
ComplexMatrix pure_marginal(const ComplexVector& psi, const IndexSet& omega, std::size_t n) {
  const IndexSet rest = complement(omega, n);
  const std::uint64_t kd = std::uint64_t{1} << omega.size();
  const std::uint64_t td = std::uint64_t{1} << rest.size();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::uint64_t a = 0; a < kd; ++a) {
    const std::uint64_t fa = full_index(a, omega, n);
    for (std::uint64_t b = 0; b < kd; ++b) {
      const std::uint64_t fb = full_index(b, omega, n);
      Complex acc = 0.0;
      for (std::uint64_t t = 0; t < td; ++t) {
        const std::uint64_t ft = full_index(t, rest, n);
        acc += psi(static_cast<Eigen::Index>(fa | ft)) * std::conj(psi(static_cast<Eigen::Index>(fb | ft)));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return out;
}

// Determinant of the principal submatrix on rows/columns {a, b, c}, taken in
// ascending index order.
double principal_minor3(const ComplexMatrix& m, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::array<Eigen::Index, 3> idx{static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b),
                                  static_cast<Eigen::Index>(c)};
  std::sort(idx.begin(), idx.end());
  Eigen::Matrix3cd sub;
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) sub(r, col) = m(idx[r], idx[col]);
  }
  return sub.determinant().real();
}

}  // namespace

ReconstructionReport forcing_chain_pure(const Graph& g, const GeneratorSet& gens,
                                        const RdmConstraintSet& rdms, const ForcingOptions& options) {
  ReconstructionReport report;
  if (auto f = check_preconditions(g, gens, rdms)) return fail(std::move(report), *f);
  require_vector_cap(g.n(), options.caps);
  const double tol = options.tolerance;

  Setup setup;
  if (auto f = prepare(g, gens, rdms, setup)) return fail(std::move(report), *f);
  if (auto f = check_translations(g, setup, Chain::kPure, tol)) return fail(std::move(report), *f);

  const std::size_t n = setup.n;
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(setup.dim));
  // All |a_r| are equal along translations and the state is normalized; the
  // global phase makes a_0 real positive.
  psi(0) = 1.0 / std::sqrt(static_cast<double>(setup.dim));
  report.log.push_back({0, 0, ForcingRule::kNormalization, 1, {}});
  for (auto j : setup.order) {
    if (j == 0) continue;
    const std::size_t k = highest_generator(setup.expansion[j]);
    const auto& t = setup.translations[k];
    const std::uint64_t p = j ^ t.shift;
    // a_p = lambda_k(p) a_(p + r_k) with |lambda| = 1, hence a_j = conj(lambda) a_p.
    psi(static_cast<Eigen::Index>(j)) =
        std::conj(t.phase[local_index(p, t.omega, n)]) * psi(static_cast<Eigen::Index>(p));
    report.log.push_back({j, j, ForcingRule::kBasisChain, 1, peel_order(setup.expansion[j])});
  }

  // Every relation must hold, not only the ones on the chosen chains.
  for (const auto& t : setup.translations) {
    for (std::uint64_t i = 0; i < setup.dim; ++i) {
      const Complex lhs = psi(static_cast<Eigen::Index>(i));
      const Complex rhs = t.phase[local_index(i, t.omega, n)] * psi(static_cast<Eigen::Index>(i ^ t.shift));
      if (std::abs(lhs - rhs) > tol) {
        return fail(std::move(report),
                    {ReconstructionStatus::kInconsistent, "basis-chain",
                     "sign relation of generator " + std::to_string(t.generator) + " fails at amplitude " +
                         std::to_string(i)});
      }
    }
  }

  for (const auto& [omega, rho] : rdms.constraints()) {
    report.max_residual = std::max(report.max_residual, max_abs_diff(pure_marginal(psi, omega, n), rho));
  }
  const ComplexVector expected = state_vector(g, options.caps);
  report.graph_deviation = (psi - expected).cwiseAbs().maxCoeff();
  report.state = std::move(psi);
  if (report.max_residual > tol) {
    return fail(std::move(report), {ReconstructionStatus::kInconsistent, "residual",
                                    "reconstructed state does not reproduce the given marginals"});
  }
  if (report.graph_deviation > tol) {
    return fail(std::move(report), {ReconstructionStatus::kInconsistent, "graph-mismatch",
                                    "reconstruction differs from the graph state"});
  }
  report.status = ReconstructionStatus::kDetermined;
  return report;
}

ReconstructionReport forcing_chain_mixed(const Graph& g, const GeneratorSet& gens,
                                         const RdmConstraintSet& rdms, const ForcingOptions& options) {
  ReconstructionReport report;
  if (auto f = check_preconditions(g, gens, rdms)) return fail(std::move(report), *f);
  require_matrix_cap(g.n(), options.caps);
  const double tol = options.tolerance;

  Setup setup;
  if (auto f = prepare(g, gens, rdms, setup)) return fail(std::move(report), *f);
  if (auto f = check_translations(g, setup, Chain::kMixed, tol)) return fail(std::move(report), *f);

  const std::size_t n = setup.n;
  const std::uint64_t dim = setup.dim;
  const double d = std::ldexp(1.0, -static_cast<int>(n));
  const auto idx = [](std::uint64_t v) { return static_cast<Eigen::Index>(v); };
  ComplexMatrix b = ComplexMatrix::Zero(idx(dim), idx(dim));
  std::vector<std::uint8_t> forced(dim * dim, 0);
  auto is_forced = [&](std::uint64_t i, std::uint64_t j) { return forced[i * dim + j] != 0; };
  auto set_entry = [&](std::uint64_t i, std::uint64_t j, Complex v) {
    b(idx(i), idx(j)) = v;
    b(idx(j), idx(i)) = std::conj(v);
    forced[i * dim + j] = forced[j * dim + i] = 1;
  };

  // Saturated Cauchy-Schwarz with equal diagonal sums makes b_rr constant
  // along every translation, hence constant; trace one fixes it to 2^-n.
  for (auto r : setup.order) {
    set_entry(r, r, Complex(d, 0.0));
    report.log.push_back({r, r, ForcingRule::kDiagonal, 1, peel_order(setup.expansion[r])});
  }

  // |b_(r, r+r_s)| = sqrt(b_rr b_(r+r_s)(r+r_s)) = 2^-n, and every summand of
  // a saturated translation sum carries the sum's phase.
  for (const auto& t : setup.translations) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      const std::uint64_t partner = r ^ t.shift;
      const Complex value = t.phase[local_index(r, t.omega, n)] * d;
      if (is_forced(r, partner)) {
        if (std::abs(b(idx(r), idx(partner)) - value) > tol) {
          return fail(std::move(report), {ReconstructionStatus::kInconsistent, "translation-sum",
                                          "translation entries " + index_pair(r, partner) +
                                              " are not Hermitian conjugates"});
        }
        continue;
      }
      set_entry(r, partner, value);
      report.log.push_back({std::min(r, partner), std::max(r, partner), ForcingRule::kTranslation, 2,
                            {t.generator}});
    }
    // Summands of each translation sum must reproduce the marginal entry.
    const std::uint64_t local_dim = std::uint64_t{1} << t.omega.size();
    const IndexSet rest = complement(t.omega, n);
    for (std::uint64_t i = 0; i < local_dim; ++i) {
      const std::uint64_t base = full_index(i, t.omega, n);
      Complex sum = 0.0;
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << rest.size()); ++k) {
        const std::uint64_t row = base | full_index(k, rest, n);
        const Complex term = b(idx(row), idx(row ^ t.shift));
        if (std::abs(term / std::abs(term) - t.phase[i]) > tol) {
          return fail(std::move(report), {ReconstructionStatus::kInconsistent, "triangle-alignment",
                                          "summand phase differs from the translation sum's phase"});
        }
        sum += term;
      }
      const auto li = static_cast<Eigen::Index>(i);
      const auto lj = static_cast<Eigen::Index>(i ^ t.local_shift);
      if (std::abs(sum - t.marginal(li, lj)) > tol) {
        return fail(std::move(report), {ReconstructionStatus::kInconsistent, "triangle-alignment",
                                        "translation summands do not add up to the marginal entry"});
      }
    }
  }

  // Zero row. For j with expansion weight >= 2, peel the highest generator k:
  // p = j + r_k. The minor on {0, p, j} with unit-modulus-times-d entries
  // equals -d |b_0j - b_0p b_pj / d|^2, so non-negativity pins b_0j.
  double min_minor = 0.0;
  for (auto j : setup.order) {
    if (std::popcount(setup.expansion[j]) < 2) continue;
    const std::size_t k = highest_generator(setup.expansion[j]);
    const std::uint64_t p = j ^ setup.translations[k].shift;
    const Complex value = b(0, idx(p)) * b(idx(p), idx(j)) / d;
    set_entry(0, j, value);
    report.log.push_back({0, j, ForcingRule::kZeroRowMinor, 2, {k}});
    const double minor = principal_minor3(b, 0, p, j);
    min_minor = std::min(min_minor, minor);
    if (minor < -tol) {
      return fail(std::move(report), {ReconstructionStatus::kInconsistent, "minor-zero-row",
                                      "principal minor on {0," + std::to_string(p) + "," + std::to_string(j) +
                                          "} is negative"});
    }
  }

  // Completion: the minor on {0, i, j} pins b_ij = conj(b_0i) b_0j / d.
  // Entries already fixed by a translation must agree with it.
  for (std::uint64_t i = 1; i < dim; ++i) {
    for (std::uint64_t j = i + 1; j < dim; ++j) {
      const Complex value = std::conj(b(0, idx(i))) * b(0, idx(j)) / d;
      if (is_forced(i, j)) {
        if (std::abs(b(idx(i), idx(j)) - value) > tol) {
          return fail(std::move(report), {ReconstructionStatus::kInconsistent, "minor-completion",
                                          "principal minor on {0," + std::to_string(i) + "," +
                                              std::to_string(j) + "} is negative"});
        }
        continue;
      }
      set_entry(i, j, value);
      report.log.push_back({i, j, ForcingRule::kCompletionMinor, 2, {}});
    }
  }

  for (const auto& [omega, rho] : rdms.constraints()) {
    report.max_residual = std::max(report.max_residual, max_abs_diff(dense_partial_trace(b, omega), rho));
  }
  report.graph_deviation = max_abs_diff(b, outer_product(state_vector(g, options.caps)));
  report.density = std::move(b);
  if (report.max_residual > tol) {
    return fail(std::move(report), {ReconstructionStatus::kInconsistent, "residual",
                                    "reconstructed state does not reproduce the given marginals"});
  }
  if (report.graph_deviation > tol) {
    return fail(std::move(report), {ReconstructionStatus::kInconsistent, "graph-mismatch",
                                    "reconstruction differs from the graph state"});
  }
  report.status = ReconstructionStatus::kDetermined;
  return report;
}

}  // namespace stabdet
