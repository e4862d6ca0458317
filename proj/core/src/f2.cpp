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

#include "stabdet/f2.hpp"

#include <stdexcept>
#include <utility>

namespace stabdet {

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitVector BitVector::from_string(const std::string& text) {
  BitVector out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    out.set(i, text[i] == '1');
  }
  return out;
}

BitVector BitVector::from_index(std::size_t length, std::uint64_t index) {
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.set(i, (index >> (length - 1 - i)) & 1u);
  }
  return out;
}

BitVector BitVector::unit(std::size_t length, std::size_t position) {
  BitVector out(length);
  out.set(position, true);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("BitVector length mismatch");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("BitVector length mismatch");
  }
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) acc ^= bits_[i] & other.bits_[i];
  return acc != 0;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto b : bits_) w += b;
  return w;
}

std::uint64_t BitVector::to_index() const {
  std::uint64_t idx = 0;
  for (auto b : bits_) idx = (idx << 1) | b;
  return idx;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_columns(const std::vector<BitVector>& columns) {
  if (columns.empty()) return {};
  F2Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) {
      throw std::invalid_argument("columns must have equal length");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

BitVector F2Matrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.set(c, at(r, c));
  return v;
}

BitVector F2Matrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, at(r, c));
  return v;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

bool F2Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (at(r, c) != at(c, r)) return false;
    }
  }
  return true;
}

F2Matrix F2Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row block out of range");
  F2Matrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(first + r, c));
  }
  return out;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("F2Matrix dimension mismatch");
  F2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      bool acc = false;
      for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.at(r, k) && b.at(k, c);
      out.set(r, c, acc);
    }
  }
  return out;
}

BitVector operator*(const F2Matrix& m, const BitVector& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("F2Matrix dimension mismatch");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool acc = false;
    for (std::size_t c = 0; c < m.cols(); ++c) acc ^= m.at(r, c) && x[c];
    out.set(r, acc);
  }
  return out;
}

namespace {

struct Elimination {
  F2Matrix reduced;
  BitVector rhs;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

// Gauss-Jordan elimination, columns visited last to first, lowest row pivot.
Elimination eliminate(F2Matrix m, BitVector rhs) {
  Elimination e{std::move(m), std::move(rhs), {}};
  auto& a = e.reduced;
  std::size_t next_row = 0;
  for (std::size_t step = 0; step < a.cols(); ++step) {
    const std::size_t c = a.cols() - 1 - step;
    std::size_t pivot = next_row;
    while (pivot < a.rows() && !a.at(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != next_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const bool tmp = a.at(pivot, k);
        a.set(pivot, k, a.at(next_row, k));
        a.set(next_row, k, tmp);
      }
      const bool tmp = e.rhs[pivot];
      e.rhs.set(pivot, e.rhs[next_row]);
      e.rhs.set(next_row, tmp);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next_row || !a.at(r, c)) continue;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        a.set(r, k, a.at(r, k) != a.at(next_row, k));
      }
      e.rhs.set(r, e.rhs[r] != e.rhs[next_row]);
    }
    e.pivots.emplace_back(next_row, c);
    ++next_row;
    if (next_row == a.rows()) break;
  }
  return e;
}

}  // namespace

std::size_t f2_rank(const F2Matrix& m) {
  return eliminate(m, BitVector(m.rows())).pivots.size();
}

std::optional<BitVector> f2_solve(const F2Matrix& m, const BitVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  auto e = eliminate(m, rhs);
  for (std::size_t r = e.pivots.size(); r < m.rows(); ++r) {
    if (e.rhs[r]) return std::nullopt;
  }
  BitVector x(m.cols());
  for (auto [r, c] : e.pivots) x.set(c, e.rhs[r]);
  return x;
}

std::optional<F2Matrix> f2_inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (f2_rank(m) != n) return std::nullopt;
  F2Matrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto col = f2_solve(m, BitVector::unit(n, c));
    for (std::size_t r = 0; r < n; ++r) inv.set(r, c, (*col)[r]);
  }
  return inv;
}

}  // namespace stabdet
