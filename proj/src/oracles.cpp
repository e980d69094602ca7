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

#include "oracles.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace confpoly {

namespace {

void check_budget(const BigInt& visits, long long budget, const char* what) {
  if (visits > budget) {
    throw BudgetError(std::string(what) + " needs " + visits.str() +
                      " tuple visits, budget is " + std::to_string(budget));
  }
}

}  // namespace

BigInt count_distinct_tuples(int n, int x, long long budget) {
  if (n < 1 || x < 0) throw RangeError("count_distinct_tuples needs n >= 1, x >= 0");
  check_budget(ipow(x, n), budget, "distinct-tuple enumeration");
  if (x == 0) return 0;
  std::vector<int> tuple(static_cast<size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (tuple[static_cast<size_t>(i)] == tuple[static_cast<size_t>(j)]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) ++count;
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == x - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<size_t>(pos)];
  }
  return count;
}

BigInt count_sumzero_tuples(int n, int N, long long budget) {
  if (n < 1 || N < 1) throw RangeError("count_sumzero_tuples needs n >= 1, N >= 1");
  check_budget(ipow(BigInt(N) * N, n - 1), budget, "sum-zero enumeration");
  const int order = N * N;  // elements encoded as a*N + b
  const int free_coords = n - 1;
  std::vector<int> tuple(static_cast<size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    // Forced last coordinate: minus the componentwise sum of the others.
    int sa = 0, sb = 0;
    for (int i = 0; i < free_coords; ++i) {
      sa += tuple[static_cast<size_t>(i)] / N;
      sb += tuple[static_cast<size_t>(i)] % N;
    }
    tuple[static_cast<size_t>(free_coords)] =
        ((N - sa % N) % N) * N + (N - sb % N) % N;
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (tuple[static_cast<size_t>(i)] == tuple[static_cast<size_t>(j)]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) ++count;
    int pos = free_coords - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == order - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<size_t>(pos)];
  }
  return count;
}

BigInt torsion_count(int d, int N) {
  if (d < 1 || N < 1) throw RangeError("torsion_count needs d >= 1, N >= 1");
  BigInt count = 0;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      if ((d * a) % N == 0 && (d * b) % N == 0) ++count;
    }
  }
  return count;
}

long long lcm_up_to(int n) {
  long long l = 1;
  for (int i = 2; i <= n; ++i) l = std::lcm(l, static_cast<long long>(i));
  return l;
}

bool fn_oracle_identity(const StirlingTable& table, int n, int x, long long budget) {
  return count_distinct_tuples(n, x, budget) == class_fn(table, n).poly.eval(x);
}

bool fn0_oracle_identity(const StirlingTable& table, int n, int N, long long budget) {
  if (N % lcm_up_to(n) != 0) {
    throw PreconditionError("fn0 oracle needs lcm(1.." + std::to_string(n) +
                            ") = " + std::to_string(lcm_up_to(n)) + " to divide N = " +
                            std::to_string(N) +
                            "; otherwise the group lacks full d-torsion");
  }
  return count_sumzero_tuples(n, N, budget) ==
         class_fn0(table, n).poly.eval(BigInt(N) * N);
}

}  // namespace confpoly
