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

#ifndef STABDET_F2_HPP_
#define STABDET_F2_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabdet {

/// Fixed-length vector over F2. Addition is XOR.
///
/// When a vector labels a computational-basis state, position 0 is the most
/// significant bit of the integer index (qubit 0 is the leftmost tensor
/// factor).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : bits_(length, 0) {}
  explicit BitVector(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(const std::string& text);
  static BitVector from_index(std::size_t length, std::uint64_t index);
  static BitVector unit(std::size_t length, std::size_t position);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

  /// Inner product mod 2.
  bool dot(const BitVector& other) const;
  std::size_t weight() const;
  bool any() const { return weight() != 0; }
  std::uint64_t to_index() const;
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Dense row-major matrix over F2.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static F2Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all the same length).
  static F2Matrix from_columns(const std::vector<BitVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool value) {
    data_[r * cols_ + c] = value ? 1 : 0;
  }

  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  F2Matrix transpose() const;
  bool is_symmetric() const;
  /// Rows [first, first + count) as a new matrix.
  F2Matrix row_block(std::size_t first, std::size_t count) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
BitVector operator*(const F2Matrix& m, const BitVector& x);

std::size_t f2_rank(const F2Matrix& m);

/// Solves m * x = rhs. Returns the lexicographically first solution (bit 0
/// most significant), or nullopt when the system is inconsistent.
///
/// Elimination visits columns from the last to the first and takes the lowest
/// available row as pivot; every free variable is then set to zero.
std::optional<BitVector> f2_solve(const F2Matrix& m, const BitVector& rhs);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<F2Matrix> f2_inverse(const F2Matrix& m);

}  // namespace stabdet

#endif  // STABDET_F2_HPP_
