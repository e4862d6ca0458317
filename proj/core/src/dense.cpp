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

#include "stabdet/dense.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stabdet/errors.hpp"

namespace stabdet {

IndexSet normalize(IndexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool is_subset(const IndexSet& inner, const IndexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

IndexSet complement(const IndexSet& set, std::size_t n) {
  IndexSet out;
  for (std::size_t q = 0; q < n; ++q) {
    if (!std::binary_search(set.begin(), set.end(), q)) out.push_back(q);
  }
  return out;
}

std::string format_index_set(const IndexSet& set) {
  std::string s;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(set[i]);
  }
  return s;
}

IndexSet parse_index_set(const std::string& text) {
  IndexSet out;
  if (text.find_first_not_of(" \t\r") == std::string::npos) return out;
  std::istringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto b = token.find_first_not_of(" \t\r");
    const auto e = token.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw ParseError("empty entry in index set");
    token = token.substr(b, e - b + 1);
    if (token.size() > 9 || token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("invalid index '" + token + "' in index set");
    }
    out.push_back(static_cast<std::size_t>(std::stoul(token)));
  }
  if (text.back() == ',') throw ParseError("trailing comma in index set");
  const auto sorted = normalize(out);
  if (sorted.size() != out.size()) throw ParseError("duplicate index in index set");
  return sorted;
}

DenseCaps DenseCaps::from_environment() {
  DenseCaps caps;
  if (const char* env = std::getenv("STABDET_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value <= 0 || value > 16) {
      throw std::invalid_argument("STABDET_CAP must be an integer in [1, 16]");
    }
    caps.vector_qubits = caps.matrix_qubits = static_cast<std::size_t>(value);
  }
  return caps;
}

void require_vector_cap(std::size_t n, const DenseCaps& caps) {
  if (n > caps.vector_qubits) {
    throw CapExceeded("dense vector on " + std::to_string(n) + " qubits exceeds cap " +
                      std::to_string(caps.vector_qubits));
  }
}

void require_matrix_cap(std::size_t n, const DenseCaps& caps) {
  if (n > caps.matrix_qubits) {
    throw CapExceeded("dense matrix on " + std::to_string(n) + " qubits exceeds cap " +
                      std::to_string(caps.matrix_qubits));
  }
}

std::size_t qubit_count(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

namespace {

// Full-register index contribution of each sub-index over `qubits`
// (first listed qubit is the most significant bit of the sub-index).
std::vector<std::uint64_t> scatter_table(const IndexSet& qubits, std::size_t n) {
  const std::size_t k = qubits.size();
  std::vector<std::uint64_t> table(std::size_t{1} << k, 0);
  for (std::uint64_t sub = 0; sub < table.size(); ++sub) {
    std::uint64_t full = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((sub >> (k - 1 - j)) & 1u) full |= std::uint64_t{1} << (n - 1 - qubits[j]);
    }
    table[sub] = full;
  }
  return table;
}

}  // namespace

ComplexMatrix dense_partial_trace(const ComplexMatrix& rho, const IndexSet& keep) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("partial trace of non-square matrix");
  const std::size_t n = qubit_count(static_cast<std::size_t>(rho.rows()));
  if (keep.empty()) throw std::invalid_argument("partial trace needs a nonempty keep set");
  if (normalize(keep) != keep) throw std::invalid_argument("keep set must be sorted and unique");
  if (keep.back() >= n) throw std::out_of_range("keep index out of range");

  const auto kept = scatter_table(keep, n);
  const auto traced = scatter_table(complement(keep, n), n);
  const auto d = static_cast<Eigen::Index>(kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      Complex acc = 0.0;
      for (auto t : traced) {
        acc += rho(static_cast<Eigen::Index>(kept[a] | t), static_cast<Eigen::Index>(kept[b] | t));
      }
      out(a, b) = acc;
    }
  }
  return out;
}

ComplexMatrix outer_product(const ComplexVector& psi) { return psi * psi.adjoint(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix diff = a - b;
  const ComplexMatrix herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

std::size_t numerical_rank(const ComplexMatrix& rho, double threshold) {
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()(i) > threshold) ++count;
  }
  return count;
}

DensityCheck check_density_matrix(const ComplexMatrix& rho, double tol, double psd_tol) {
  DensityCheck check;
  if (rho.rows() != rho.cols() || rho.rows() == 0) return check;
  check.hermitian = max_abs_diff(rho, rho.adjoint()) <= tol;
  check.unit_trace = std::abs(rho.trace() - Complex(1.0, 0.0)) <= tol;
  check.nonnegative_diagonal = true;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (rho(i, i).real() < -tol || std::abs(rho(i, i).imag()) > tol) {
      check.nonnegative_diagonal = false;
    }
  }
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  check.min_eigenvalue = solver.eigenvalues().minCoeff();
  check.positive_semidefinite = check.min_eigenvalue >= -psd_tol;
  return check;
}

namespace {

// Values below this magnitude are printed as zero so that floating-point
// noise does not leak into the text format.
constexpr double kPrintFloor = 1e-14;

std::string format_real(double x) {
  if (std::abs(x) < kPrintFloor) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool next_content_line(std::istream& is, std::string& line, std::size_t& line_no) {
  while (std::getline(is, line)) {
    ++line_no;
    line = trim(line);
    if (!line.empty() && line[0] != '#') return true;
  }
  return false;
}

std::size_t parse_header(const std::string& line, const std::string& key, std::size_t line_no) {
  const std::string prefix = key + "=";
  if (line.rfind(prefix, 0) != 0) {
    throw ParseError("expected header '" + prefix + "<d>'", line_no);
  }
  const std::string digits = line.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("invalid dimension in header", line_no);
  }
  const std::size_t d = std::stoull(digits);
  if (d == 0 || (d & (d - 1)) != 0) throw ParseError("dimension must be a power of two", line_no);
  return d;
}

}  // namespace

std::string format_complex(Complex z) {
  std::string re = format_real(z.real());
  std::string im = format_real(z.imag());
  if (im[0] != '-') im.insert(im.begin(), '+');
  return re + im + "j";
}

Complex parse_complex(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin || (*end != '+' && *end != '-')) {
    throw ParseError("malformed complex entry '" + token + "'");
  }
  const char* im_begin = end;
  const double im = std::strtod(im_begin, &end);
  if (end == im_begin || *end != 'j' || *(end + 1) != '\0') {
    throw ParseError("malformed complex entry '" + token + "'");
  }
  return {re, im};
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << "dim=" << m.rows() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << format_complex(m(r, c));
    }
    os << '\n';
  }
}

void write_vector(std::ostream& os, const ComplexVector& v) {
  os << "len=" << v.size() << '\n';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << format_complex(v(i)) << '\n';
}

ComplexMatrix read_matrix(std::istream& is, std::size_t& line_no) {
  std::string line;
  if (!next_content_line(is, line, line_no)) throw ParseError("missing matrix header", line_no);
  const std::size_t d = parse_header(line, "dim", line_no);
  ComplexMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    if (!next_content_line(is, line, line_no)) {
      throw ParseError("matrix ended after " + std::to_string(r) + " rows", line_no);
    }
    std::istringstream row(line);
    std::string token;
    std::size_t c = 0;
    while (row >> token) {
      if (c == d) throw ParseError("too many entries in matrix row", line_no);
      try {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(token);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      ++c;
    }
    if (c != d) throw ParseError("too few entries in matrix row", line_no);
  }
  return m;
}

ComplexMatrix read_matrix(std::istream& is) {
  std::size_t line_no = 0;
  return read_matrix(is, line_no);
}

ComplexVector read_vector(std::istream& is) {
  std::size_t line_no = 0;
  std::string line;
  if (!next_content_line(is, line, line_no)) throw ParseError("missing vector header", line_no);
  const std::size_t d = parse_header(line, "len", line_no);
  ComplexVector v(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (!next_content_line(is, line, line_no)) throw ParseError("vector too short", line_no);
    try {
      v(static_cast<Eigen::Index>(i)) = parse_complex(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return v;
}

}  // namespace stabdet
