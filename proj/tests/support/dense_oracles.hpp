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

// Reference implementations written directly from textbook definitions, with
// no shared code paths beyond the value types.

#ifndef STABDET_TESTS_DENSE_ORACLES_HPP_
#define STABDET_TESTS_DENSE_ORACLES_HPP_

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "stabdet/dense.hpp"

namespace stabdet::testing {

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline ComplexMatrix pauli_factor(char c) {
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

// "XZI" with an optional leading sign, as a Kronecker product.
inline ComplexMatrix kron_pauli(std::string text) {
  Complex phase = 1.0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    if (text[0] == '-') phase = -1.0;
    text.erase(0, 1);
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (char c : text) out = kron(out, pauli_factor(c));
  return phase * out;
}

// Tr over every qubit outside `keep`, summing rho(i e, j e) over environment
// strings e. Bits are assembled qubit by qubit (qubit 0 most significant).
inline ComplexMatrix reference_partial_trace(const ComplexMatrix& rho, std::size_t n, const IndexSet& keep) {
  std::vector<bool> kept(n, false);
  for (auto q : keep) kept[q] = true;
  const std::size_t k = keep.size();
  const std::size_t e = n - k;
  auto assemble = [&](std::uint64_t sys, std::uint64_t env) {
    std::uint64_t full = 0;
    std::size_t si = 0;
    std::size_t ei = 0;
    for (std::size_t q = 0; q < n; ++q) {
      bool bit;
      if (kept[q]) {
        bit = (sys >> (k - 1 - si++)) & 1u;
      } else {
        bit = (env >> (e - 1 - ei++)) & 1u;
      }
      full = (full << 1) | (bit ? 1u : 0u);
    }
    return full;
  };
  const auto dk = static_cast<Eigen::Index>(std::uint64_t{1} << k);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      for (std::uint64_t env = 0; env < (std::uint64_t{1} << e); ++env) {
        out(i, j) += rho(static_cast<Eigen::Index>(assemble(i, env)), static_cast<Eigen::Index>(assemble(j, env)));
      }
    }
  }
  return out;
}

// Every n-qubit stabilizer state, up to global phase, found by breadth-first
// search over H, S and CNOT circuits applied to |0...0>.
inline std::vector<ComplexVector> states_by_circuit_search(std::size_t n) {
  auto key = [](const ComplexVector& v) {
    // Fix the global phase by the first nonzero amplitude, then round.
    Eigen::Index first = 0;
    while (std::abs(v(first)) < 1e-9) ++first;
    const Complex phase = std::abs(v(first)) / v(first);
    std::vector<long long> k;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const Complex z = v(i) * phase;
      k.push_back(std::llround(z.real() * 1e6));
      k.push_back(std::llround(z.imag() * 1e6));
    }
    return k;
  };
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  std::vector<ComplexMatrix> gates;
  const ComplexMatrix h = (ComplexMatrix(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0);
  const ComplexMatrix s = (ComplexMatrix(2, 2) << 1, 0, 0, Complex(0, 1)).finished();
  for (std::size_t q = 0; q < n; ++q) {
    for (const auto& g1 : {h, s}) {
      ComplexMatrix u = ComplexMatrix::Identity(1, 1);
      for (std::size_t p = 0; p < n; ++p) u = kron(u, p == q ? g1 : ComplexMatrix::Identity(2, 2));
      gates.push_back(u);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
      for (Eigen::Index x = 0; x < dim; ++x) {
        const bool ctrl = (x >> (n - 1 - a)) & 1;
        const Eigen::Index y = ctrl ? (x ^ (Eigen::Index{1} << (n - 1 - b))) : x;
        u(y, x) = 1.0;
      }
      gates.push_back(u);
    }
  }
  ComplexVector start = ComplexVector::Zero(dim);
  start(0) = 1.0;
  std::set<std::vector<long long>> seen{key(start)};
  std::vector<ComplexVector> found{start};
  std::vector<ComplexVector> frontier{start};
  while (!frontier.empty()) {
    std::vector<ComplexVector> next;
    for (const auto& v : frontier) {
      for (const auto& g : gates) {
        ComplexVector w = g * v;
        if (seen.insert(key(w)).second) {
          found.push_back(w);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace stabdet::testing

#endif  // STABDET_TESTS_DENSE_ORACLES_HPP_
