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

#ifndef CONFPOLY_BIGINT_HPP
#define CONFPOLY_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace confpoly {

// Exact signed integer of unbounded magnitude. Everything the library
// counts or tabulates is a BigInt; machine-word types appear only as
// loop indices.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// t^e for e >= 0.
inline BigInt ipow(const BigInt& t, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace confpoly

#endif  // CONFPOLY_BIGINT_HPP
