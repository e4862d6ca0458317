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

#ifndef STABDET_ERRORS_HPP_
#define STABDET_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabdet {

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A dense rendering or enumeration was requested above its configured size.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace stabdet

#endif  // STABDET_ERRORS_HPP_
