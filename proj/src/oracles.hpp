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

#ifndef CONFPOLY_ORACLES_HPP
#define CONFPOLY_ORACLES_HPP

#include "bigint.hpp"
#include "motive.hpp"

namespace confpoly {

// Budgets are deterministic tuple-visit counts, not wall-clock.
inline constexpr long long kDefaultOracleBudget = 100'000'000;

// Number of n-tuples of pairwise-distinct elements from a set of size x,
// counted by enumerating all x^n tuples. Visits x^n tuples; throws
// BudgetError if that exceeds the budget.
BigInt count_distinct_tuples(int n, int x, long long budget = kDefaultOracleBudget);

// Number of n-tuples of pairwise-distinct elements of the group (Z/NZ)^2
// summing to the identity. The last coordinate is forced to minus the sum
// of the others, so the enumeration visits N^(2(n-1)) tuples.
BigInt count_sumzero_tuples(int n, int N, long long budget = kDefaultOracleBudget);

// Solutions of d*z = 0 in (Z/NZ)^2 by enumeration; the group's d-torsion
// has gcd(d,N)^2 elements.
BigInt torsion_count(int d, int N);

// lcm(1, ..., n).
long long lcm_up_to(int n);

// True iff count_distinct_tuples(n, x) equals [F_n(X)] evaluated at x.
bool fn_oracle_identity(const StirlingTable& table, int n, int x,
                        long long budget = kDefaultOracleBudget);

// True iff count_sumzero_tuples(n, N) equals [F_n^0(E)] evaluated at N^2.
// Requires lcm(1..n) | N, so that the group has full d-torsion for every
// part size d <= n; violating that is a PreconditionError, distinct from
// budget exhaustion.
bool fn0_oracle_identity(const StirlingTable& table, int n, int N,
                         long long budget = kDefaultOracleBudget);

}  // namespace confpoly

#endif  // CONFPOLY_ORACLES_HPP
