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

#ifndef STABDET_DENSE_HPP_
#define STABDET_DENSE_HPP_

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stabdet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Sorted, duplicate-free list of 0-based qubit indices.
using IndexSet = std::vector<std::size_t>;

IndexSet normalize(IndexSet set);
bool is_subset(const IndexSet& inner, const IndexSet& outer);
IndexSet complement(const IndexSet& set, std::size_t n);
/// "0,1,2"; the empty set renders as "".
std::string format_index_set(const IndexSet& set);
/// Accepts comma- and/or whitespace-separated non-negative integers.
IndexSet parse_index_set(const std::string& text);

/// Largest qubit counts for dense state vectors and dense 2^n x 2^n matrices.
struct DenseCaps {
  std::size_t vector_qubits = 12;
  std::size_t matrix_qubits = 10;

  /// Defaults, overridden by STABDET_CAP=<q> when set (applies to both caps).
  static DenseCaps from_environment();
};

void require_vector_cap(std::size_t n, const DenseCaps& caps);
void require_matrix_cap(std::size_t n, const DenseCaps& caps);

/// log2 of a power-of-two dimension; throws on anything else.
std::size_t qubit_count(std::size_t dim);

/// Partial trace of an n-qubit operator onto the qubits in `keep`, tracing
/// out the complement. Qubit order within the result follows `keep`
/// ascending.
ComplexMatrix dense_partial_trace(const ComplexMatrix& rho, const IndexSet& keep);

ComplexMatrix outer_product(const ComplexVector& psi);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Half the sum of absolute eigenvalues of the Hermitian part of a - b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Number of eigenvalues above `threshold` of a Hermitian matrix.
std::size_t numerical_rank(const ComplexMatrix& rho, double threshold = 1e-9);

struct DensityCheck {
  bool hermitian = false;
  bool unit_trace = false;
  bool nonnegative_diagonal = false;
  bool positive_semidefinite = false;
  double min_eigenvalue = 0.0;

  bool ok() const {
    return hermitian && unit_trace && nonnegative_diagonal && positive_semidefinite;
  }
};

/// Hermitian and unit trace within `tol`; eigenvalues >= -psd_tol.
DensityCheck check_density_matrix(const ComplexMatrix& rho, double tol = 1e-12,
                                  double psd_tol = 1e-9);

// Text grid format: a header line "dim=<d>" followed by d rows of d
// space-separated entries "re+imj", each part printed with 12 significant
// digits. Vectors use the header "len=<d>" and one entry per line.

std::string format_complex(Complex z);
Complex parse_complex(const std::string& token);

void write_matrix(std::ostream& os, const ComplexMatrix& m);
void write_vector(std::ostream& os, const ComplexVector& v);

/// Reads one "dim=" block. `line_no` tracks the 1-based line counter of the
/// enclosing stream for error messages and is advanced past the block.
ComplexMatrix read_matrix(std::istream& is, std::size_t& line_no);
ComplexMatrix read_matrix(std::istream& is);
ComplexVector read_vector(std::istream& is);

}  // namespace stabdet

#endif  // STABDET_DENSE_HPP_
