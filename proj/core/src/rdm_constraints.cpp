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

#include <istream>
#include <ostream>
#include <stdexcept>

#include "stabdet/determination.hpp"
#include "stabdet/errors.hpp"

namespace stabdet {

void RdmConstraintSet::add(IndexSet omega, ComplexMatrix rho) {
  if (omega.empty()) throw std::invalid_argument("constraint subsystem must be nonempty");
  if (normalize(omega) != omega) throw std::invalid_argument("constraint subsystem must be sorted and unique");
  if (omega.back() >= n_) throw std::out_of_range("constraint subsystem index out of range");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << omega.size());
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("constraint on {" + format_index_set(omega) +
                                "} must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  constraints_[std::move(omega)] = std::move(rho);
}

RdmConstraintSet RdmConstraintSet::from_state(const ComplexMatrix& rho,
                                              const std::vector<IndexSet>& omegas) {
  RdmConstraintSet out(qubit_count(static_cast<std::size_t>(rho.rows())));
  for (const auto& omega : omegas) out.add(omega, dense_partial_trace(rho, omega));
  return out;
}

std::vector<IndexSet> RdmConstraintSet::subsystems() const {
  std::vector<IndexSet> out;
  for (const auto& [omega, rho] : constraints_) out.push_back(omega);
  return out;
}

std::vector<std::string> RdmConstraintSet::problems(double tol) const {
  std::vector<std::string> out;
  for (const auto& [omega, rho] : constraints_) {
    const auto check = check_density_matrix(rho, tol);
    if (check.ok()) continue;
    std::string msg = "{" + format_index_set(omega) + "}:";
    if (!check.hermitian) msg += " not Hermitian;";
    if (!check.unit_trace) msg += " trace != 1;";
    if (!check.nonnegative_diagonal) msg += " negative diagonal;";
    if (!check.positive_semidefinite) msg += " not positive semidefinite;";
    out.push_back(msg);
  }
  return out;
}

RdmConstraintSet read_constraint_file(std::istream& is, std::size_t n) {
  RdmConstraintSet out(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    line = line.substr(b);
    const std::string prefix = "omega:";
    if (line.rfind(prefix, 0) != 0) throw ParseError("expected 'omega: i,j,...'", line_no);
    IndexSet omega;
    try {
      omega = parse_index_set(line.substr(prefix.size()));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (omega.empty()) throw ParseError("empty subsystem", line_no);
    if (omega.back() >= n) throw ParseError("subsystem index out of range", line_no);
    const std::size_t header_line = line_no;
    ComplexMatrix rho = read_matrix(is, line_no);
    if (out.contains(omega)) throw ParseError("duplicate subsystem", header_line);
    try {
      out.add(std::move(omega), std::move(rho));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), header_line);
    }
  }
  return out;
}

void write_constraint_file(std::ostream& os, const RdmConstraintSet& rdms) {
  for (const auto& [omega, rho] : rdms.constraints()) {
    os << "omega: " << format_index_set(omega) << '\n';
    write_matrix(os, rho);
  }
}

}  // namespace stabdet
