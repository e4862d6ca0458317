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

#ifndef STABDET_GRAPH_STATE_HPP_
#define STABDET_GRAPH_STATE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "stabdet/dense.hpp"
#include "stabdet/f2.hpp"
#include "stabdet/pauli.hpp"
#include "stabdet/stabilizer.hpp"

namespace stabdet {

/// Simple undirected graph stored as a symmetric, zero-diagonal adjacency
/// matrix over F2.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adjacency_(n, n) {}
  /// Throws std::invalid_argument unless symmetric with zero diagonal.
  explicit Graph(F2Matrix adjacency);

  /// Throws on self-loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static Graph path(std::size_t n);
  static Graph star(std::size_t n, std::size_t center = 0);
  static Graph complete(std::size_t n);

  std::size_t n() const { return adjacency_.rows(); }
  const F2Matrix& adjacency() const { return adjacency_; }
  bool adjacent(std::size_t s, std::size_t t) const { return adjacency_.at(s, t); }
  /// Edges (s, t) with s < t in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  F2Matrix adjacency_;
};

/// K_s = X on s, Z on every neighbour of s, identity elsewhere, phase +1.
GeneratorSet canonical_generators(const Graph& g);

/// sum over s < t of theta_st x_s x_t, mod 2.
bool quadratic_form(const Graph& g, const BitVector& x);
/// Same, with x given as a basis-state index (qubit 0 most significant).
bool quadratic_form(const Graph& g, std::uint64_t x);

/// Amplitudes (-1)^f(x) / sqrt(2^n).
ComplexVector state_vector(const Graph& g, const DenseCaps& caps = {});

/// Elementary single-qubit Cliffords used by `LocalCliffordLayer`.
enum class CliffordGate : std::uint8_t { kH, kS, kX, kZ };

/// Single-qubit Clifford U = gates.back() ... gates.front() (first gate acts
/// first). `symplectic` is its action on (z, x) bits: (z', x') = M (z, x).
struct SingleQubitClifford {
  std::vector<CliffordGate> gates;

  std::array<std::array<bool, 2>, 2> symplectic() const;
  bool is_identity_word() const { return gates.empty(); }
};

/// Tensor product of single-qubit Cliffords. Sign corrections are kept as
/// explicit X/Z gates in the per-qubit words.
struct LocalCliffordLayer {
  std::vector<SingleQubitClifford> qubits;

  std::size_t n() const { return qubits.size(); }
  bool is_identity() const;
};

/// U M U^dagger for the layer's unitary U, with exact phase.
PauliOperator conjugate(const LocalCliffordLayer& layer, const PauliOperator& op);
GeneratorSet conjugate(const LocalCliffordLayer& layer, const GeneratorSet& gens);

struct LcReduction {
  Graph graph;
  LocalCliffordLayer layer;
};

/// Finds a graph and local Clifford layer mapping the stabilizer group of
/// `gens` (a full set, l = n) onto the graph state's group.
///
/// Procedure: column-reduce S_x with the lowest qubit as pivot and apply H on
/// every non-pivot qubit, which makes S_x invertible; recombine generators so
/// that S_x = I; apply S where a generator carries Y on its own qubit; apply Z
/// where a generator has sign -1.
LcReduction lc_to_graph(const GeneratorSet& gens);

/// Graph file: first line n, then one "u v" edge per line (0-based).
Graph read_graph_file(std::istream& is);
void write_graph_file(std::ostream& os, const Graph& g);

}  // namespace stabdet

#endif  // STABDET_GRAPH_STATE_HPP_
