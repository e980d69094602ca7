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

#ifndef CONFPOLY_STIRLING_HPP
#define CONFPOLY_STIRLING_HPP

#include <map>
#include <mutex>
#include <vector>

#include "bigint.hpp"
#include "partitions.hpp"
#include "poly.hpp"

namespace confpoly {

// Entries near the bottom of the default triangle have hundreds of digits.
inline constexpr int kDefaultNMax = 64;
inline constexpr int kStirlingOracleLimit = 10;
inline constexpr int kBurnsideMaxN = 7;
inline constexpr int kBurnsideMaxX = 6;

// Cached triangles of the unsigned Stirling numbers of the first kind
// s(n,k) and their gcd^2-weighted variant s_m(n,k), for 1 <= k <= n <= n_max.
//
// Both quantities have two independent computation paths (recurrence vs
// shape aggregation for s, shape aggregation vs set-partition enumeration
// for s_m); the pairs are cross-checked in the test suite.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max = kDefaultNMax);

  int n_max() const { return n_max_; }

  // s(n,k) from the recurrence s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k).
  // Out-of-triangle queries (k < 1 or k > n, with n >= 1) return 0;
  // s(0,0) = 1 by convention.
  BigInt stirling_first(int n, int k) const;

  // s(n,k) as the sum over shapes of n with k parts of
  // multiplicity(shape) * prod_i (part_i - 1)!.
  BigInt stirling_first_by_shapes(int n, int k) const;

  // s_m(n,k): like stirling_first_by_shapes but each shape weighted by
  // gcd(shape)^2.
  BigInt stirling_mod(int n, int k) const;

  // Row k = 1..n of either triangle.
  std::vector<BigInt> stirling_first_row(int n) const;
  std::vector<BigInt> stirling_mod_row(int n) const;

  const BigInt& fact(int n) const;

 private:
  void check_n(int n) const;
  std::vector<BigInt> compute_mod_row(int n) const;

  int n_max_;
  std::vector<BigInt> fact_;                  // 0..n_max
  std::vector<std::vector<BigInt>> s_;        // s_[n][k], 0 <= k <= n
  // s_m rows are filled on demand; a full eager build at the default
  // n_max would sweep millions of shapes.
  mutable std::mutex mod_mutex_;
  mutable std::map<int, std::vector<BigInt>> mod_rows_;
};

// s_m(n,k) evaluated by direct enumeration of all k-block set partitions,
// independent of the shape-aggregated path.
BigInt stirling_mod_oracle(int n, int k, int limit = kStirlingOracleLimit);

// x(x+1)...(x+n-1) as a polynomial in "x"; its coefficients are s(n,k).
Poly rising_factorial(int n);

// Checks sum_{tau in S_n} x^cycles(tau) = x(x+1)...(x+n-1) by enumerating
// all n! permutations.
bool burnside_multiset_check(int n, int x);

}  // namespace confpoly

#endif  // CONFPOLY_STIRLING_HPP
