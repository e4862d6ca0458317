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

#include "stabdet/graph_state.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stabdet/errors.hpp"

namespace stabdet {

Graph::Graph(F2Matrix adjacency) : adjacency_(std::move(adjacency)) {
  if (!adjacency_.is_symmetric()) throw std::invalid_argument("adjacency matrix must be symmetric");
  for (std::size_t s = 0; s < n(); ++s) {
    if (adjacency_.at(s, s)) throw std::invalid_argument("graph must not have self-loops");
  }
}

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  F2Matrix theta(n, n);
  for (auto [s, t] : edges) {
    if (s >= n || t >= n) throw std::out_of_range("edge endpoint out of range");
    if (s == t) throw std::invalid_argument("self-loop on vertex " + std::to_string(s));
    if (theta.at(s, t)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(s) + " " + std::to_string(t));
    }
    theta.set(s, t, true);
    theta.set(t, s, true);
  }
  return Graph(std::move(theta));
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s = 0; s + 1 < n; ++s) edges.emplace_back(s, s + 1);
  return from_edges(n, edges);
}

Graph Graph::star(std::size_t n, std::size_t center) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s = 0; s < n; ++s) {
    if (s != center) edges.emplace_back(center, s);
  }
  return from_edges(n, edges);
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) edges.emplace_back(s, t);
  }
  return from_edges(n, edges);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < n(); ++s) {
    for (std::size_t t = s + 1; t < n(); ++t) {
      if (adjacent(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

GeneratorSet canonical_generators(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<PauliOperator> ops;
  ops.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    ops.emplace_back(g.adjacency().row(s), BitVector::unit(n, s));
  }
  return {n, std::move(ops)};
}

bool quadratic_form(const Graph& g, const BitVector& x) {
  if (x.size() != g.n()) throw std::invalid_argument("quadratic form argument has wrong length");
  bool acc = false;
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (!x[s]) continue;
    for (std::size_t t = s + 1; t < g.n(); ++t) acc ^= x[t] && g.adjacent(s, t);
  }
  return acc;
}

bool quadratic_form(const Graph& g, std::uint64_t x) {
  const std::size_t n = g.n();
  bool acc = false;
  for (std::size_t s = 0; s < n; ++s) {
    if (!((x >> (n - 1 - s)) & 1u)) continue;
    for (std::size_t t = s + 1; t < n; ++t) {
      acc ^= ((x >> (n - 1 - t)) & 1u) && g.adjacent(s, t);
    }
  }
  return acc;
}

ComplexVector state_vector(const Graph& g, const DenseCaps& caps) {
  require_vector_cap(g.n(), caps);
  const std::uint64_t dim = std::uint64_t{1} << g.n();
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexVector psi(static_cast<Eigen::Index>(dim));
  for (std::uint64_t x = 0; x < dim; ++x) {
    psi(static_cast<Eigen::Index>(x)) = quadratic_form(g, x) ? -amp : amp;
  }
  return psi;
}

std::array<std::array<bool, 2>, 2> SingleQubitClifford::symplectic() const {
  std::array<std::array<bool, 2>, 2> m{{{true, false}, {false, true}}};
  for (auto gate : gates) {
    std::array<std::array<bool, 2>, 2> g{{{true, false}, {false, true}}};
    if (gate == CliffordGate::kH) g = {{{false, true}, {true, false}}};
    if (gate == CliffordGate::kS) g = {{{true, true}, {false, true}}};
    std::array<std::array<bool, 2>, 2> next{};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) next[r][c] = (g[r][0] && m[0][c]) != (g[r][1] && m[1][c]);
    }
    m = next;
  }
  return m;
}

bool LocalCliffordLayer::is_identity() const {
  for (const auto& q : qubits) {
    if (!q.is_identity_word()) return false;
  }
  return true;
}

namespace {

// Conjugates the factor at `qubit` by one gate; returns true if the sign flips.
bool conjugate_factor(BitVector& z, BitVector& x, std::size_t qubit, CliffordGate gate) {
  const bool zb = z[qubit];
  const bool xb = x[qubit];
  switch (gate) {
    case CliffordGate::kH:  // X <-> Z, Y -> -Y
      z.set(qubit, xb);
      x.set(qubit, zb);
      return zb && xb;
    case CliffordGate::kS:  // X -> Y, Y -> -X, Z -> Z
      z.set(qubit, zb != xb);
      return zb && xb;
    case CliffordGate::kX:  // Y -> -Y, Z -> -Z
      return zb;
    case CliffordGate::kZ:  // X -> -X, Y -> -Y
      return xb;
  }
  return false;
}

void apply_gate(PauliOperator& op, std::size_t qubit, CliffordGate gate) {
  BitVector z = op.z();
  BitVector x = op.x();
  const bool flip = conjugate_factor(z, x, qubit, gate);
  const Phase phase = flip ? op.phase() * Phase::kMinusOne : op.phase();
  op = PauliOperator(std::move(z), std::move(x), phase);
}

}  // namespace

PauliOperator conjugate(const LocalCliffordLayer& layer, const PauliOperator& op) {
  if (layer.n() != op.n()) throw std::invalid_argument("layer size mismatch");
  PauliOperator out = op;
  for (std::size_t q = 0; q < layer.n(); ++q) {
    for (auto gate : layer.qubits[q].gates) apply_gate(out, q, gate);
  }
  return out;
}

GeneratorSet conjugate(const LocalCliffordLayer& layer, const GeneratorSet& gens) {
  std::vector<PauliOperator> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(conjugate(layer, g));
  return {gens.n(), std::move(out)};
}

LcReduction lc_to_graph(const GeneratorSet& gens) {
  require_valid(gens);
  const std::size_t n = gens.n();
  if (gens.size() != n) throw std::invalid_argument("lc_to_graph needs a full generator set");

  std::vector<PauliOperator> g(gens.begin(), gens.end());
  LocalCliffordLayer layer;
  layer.qubits.resize(n);
  auto apply_everywhere = [&](std::size_t qubit, CliffordGate gate) {
    layer.qubits[qubit].gates.push_back(gate);
    for (auto& op : g) apply_gate(op, qubit, gate);
  };
  auto eliminate_on = [&](std::size_t qubit, std::size_t pivot) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c != pivot && g[c].x()[qubit]) g[c] = multiply(g[c], g[pivot]);
    }
  };

  std::vector<bool> pivot_qubit(n, false);
  std::size_t rank = 0;
  for (std::size_t q = 0; q < n && rank < n; ++q) {
    std::size_t c = rank;
    while (c < n && !g[c].x()[q]) ++c;
    if (c == n) continue;
    std::swap(g[c], g[rank]);
    eliminate_on(q, rank);
    pivot_qubit[q] = true;
    ++rank;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (!pivot_qubit[q]) apply_everywhere(q, CliffordGate::kH);
  }

  for (std::size_t q = 0; q < n; ++q) {
    std::size_t c = q;
    while (c < n && !g[c].x()[q]) ++c;
    if (c == n) throw std::logic_error("x-block still singular after basis exchange");
    std::swap(g[c], g[q]);
    eliminate_on(q, q);
  }

  for (std::size_t q = 0; q < n; ++q) {
    if (g[q].z()[q]) apply_everywhere(q, CliffordGate::kS);
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (g[q].phase() == Phase::kMinusOne) apply_everywhere(q, CliffordGate::kZ);
  }

  F2Matrix theta(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) theta.set(s, t, g[s].z()[t]);
  }
  return {Graph(std::move(theta)), std::move(layer)};
}

Graph read_graph_file(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      line = line.substr(b);
      return true;
    }
    return false;
  };
  if (!next()) throw ParseError("missing vertex count", line_no);
  std::size_t n = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n) || (ss >> extra) || line[0] == '-') {
      throw ParseError("first line must be the vertex count", line_no);
    }
  }
  if (n == 0) throw ParseError("vertex count must be positive", line_no);
  F2Matrix theta(n, n);
  while (next()) {
    std::istringstream ss(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) throw ParseError("expected edge 'u v'", line_no);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError("edge endpoint out of range", line_no);
    }
    const auto s = static_cast<std::size_t>(u);
    const auto t = static_cast<std::size_t>(v);
    if (s == t) throw ParseError("self-loop", line_no);
    if (theta.at(s, t)) throw ParseError("duplicate edge", line_no);
    theta.set(s, t, true);
    theta.set(t, s, true);
  }
  return Graph(std::move(theta));
}

void write_graph_file(std::ostream& os, const Graph& g) {
  os << g.n() << '\n';
  for (auto [s, t] : g.edges()) os << s << ' ' << t << '\n';
}

}  // namespace stabdet
