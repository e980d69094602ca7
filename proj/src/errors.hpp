/*
   Copyright 2026 The confpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONFPOLY_ERRORS_HPP
#define CONFPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confpoly {

// Argument outside the supported range (n < 1, n > n_max, ...).
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// An enumeration would exceed its configured resource bound.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold (caller error, not a resource issue).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Arithmetic attempted on polynomials with different variable tags.
class VarMismatchError : public std::logic_error {
 public:
  explicit VarMismatchError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace confpoly

#endif  // CONFPOLY_ERRORS_HPP
