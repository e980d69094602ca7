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

#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "motive.hpp"
#include "poset.hpp"
#include "stirling.hpp"

namespace confpoly {

namespace {

std::map<int, std::vector<BigInt>> make_table(
    std::initializer_list<std::pair<int, std::vector<long long>>> rows) {
  std::map<int, std::vector<BigInt>> out;
  for (const auto& [n, coeffs] : rows) {
    std::vector<BigInt> row;
    row.reserve(coeffs.size());
    for (long long c : coeffs) row.emplace_back(c);
    out.emplace(n, std::move(row));
  }
  return out;
}

}  // namespace

const std::map<int, std::vector<BigInt>>& reference_table_fn() {
  static const auto table = make_table({
      {2, {0, -1, 1}},
      {3, {0, 2, -3, 1}},
      {4, {0, -6, 11, -6, 1}},
      {5, {0, 24, -50, 35, -10, 1}},
      {6, {0, -120, 274, -225, 85, -15, 1}},
      {7, {0, 720, -1764, 1624, -735, 175, -21, 1}},
      {8, {0, -5040, 13068, -13132, 6769, -1960, 322, -28, 1}},
  });
  return table;
}

const std::map<int, std::vector<BigInt>>& reference_table_fn0() {
  static const auto table = make_table({
      {2, {-4, 1}},
      {3, {18, -3, 1}},
      {4, {-96, 20, -6, 1}},
      {5, {600, -50, 35, -10, 1}},
      {6, {-4320, 864, -270, 85, -15, 1}},
      {7, {35280, -1764, 1624, -735, 175, -21, 1}},
      {8, {-322560, 42048, -16912, 7084, -1960, 322, -28, 1}},
  });
  return table;
}

namespace {

using Check = CheckResult;

Check check_table_parity(const StirlingTable& table, Space space, int n_cap) {
  const auto& reference =
      space == Space::FN ? reference_table_fn() : reference_table_fn0();
  const std::string name =
      space == Space::FN ? "table-parity-fn" : "table-parity-fn0";
  for (const auto& [n, expected] : reference) {
    if (n > n_cap) continue;
    const Poly actual = class_of(table, space, n).poly;
    if (actual.coeffs() != expected) {
      return {name, CheckStatus::Fail,
              "row n=" + std::to_string(n) + " diverges from the reference table"};
    }
  }
  return {name, CheckStatus::Pass, ""};
}

Check check_dual_path_s(const StirlingTable& table, int n_cap) {
  const int top = std::min(12, n_cap);
  for (int n = 1; n <= top; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (table.stirling_first(n, k) != table.stirling_first_by_shapes(n, k)) {
        return {"stirling-dual-path-s", CheckStatus::Fail,
                "recurrence and shape sum differ at (" + std::to_string(n) + "," +
                    std::to_string(k) + ")"};
      }
    }
  }
  return {"stirling-dual-path-s", CheckStatus::Pass, ""};
}

Check check_dual_path_sm(const StirlingTable& table, int n_cap) {
  const int top = std::min(kStirlingOracleLimit, n_cap);
  for (int n = 1; n <= top; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (table.stirling_mod(n, k) != stirling_mod_oracle(n, k)) {
        return {"stirling-dual-path-sm", CheckStatus::Fail,
                "shape sum and set-partition sum differ at (" + std::to_string(n) +
                    "," + std::to_string(k) + ")"};
      }
    }
  }
  return {"stirling-dual-path-sm", CheckStatus::Pass, ""};
}

Check check_mobius_paths(int n_cap) {
  const int top = std::min(5, n_cap);
  for (int n = 1; n <= top; ++n) {
    bool ok = true;
    for_each_set_partition(n, [&](const SetPartition& sigma) {
      if (mobius_recursive(sigma) != mobius_closed(sigma)) ok = false;
    });
    if (!ok) {
      return {"mobius-recursive-vs-closed", CheckStatus::Fail,
              "disagreement on Part(" + std::to_string(n) + ")"};
    }
  }
  return {"mobius-recursive-vs-closed", CheckStatus::Pass, ""};
}

Check check_mobius_defining_relation(int n_cap) {
  const int top = std::min(5, n_cap);
  for (int n = 1; n <= top; ++n) {
    const auto elements = all_set_partitions(n);
    const SetPartition bottom = SetPartition::minimum(n);
    for (const auto& pi : elements) {
      BigInt sum = 0;
      for (const auto& sigma : elements) {
        if (refines(sigma, pi)) sum += mobius_closed(sigma);
      }
      const BigInt expected = pi == bottom ? 1 : 0;
      if (sum != expected) {
        return {"mobius-defining-relation", CheckStatus::Fail,
                "sum over [0, pi] wrong for pi = " + pi.to_string()};
      }
    }
  }
  return {"mobius-defining-relation", CheckStatus::Pass, ""};
}

Check check_rising_factorial(const StirlingTable& table, int n_cap) {
  const int top = std::min(12, n_cap);
  for (int n = 1; n <= top; ++n) {
    const Poly p = rising_factorial(n);
    for (int k = 0; k <= n; ++k) {
      if (p.coeff(k) != table.stirling_first(n, k)) {
        return {"rising-factorial-coefficients", CheckStatus::Fail,
                "coefficient of x^" + std::to_string(k) + " wrong at n = " +
                    std::to_string(n)};
      }
    }
  }
  return {"rising-factorial-coefficients", CheckStatus::Pass, ""};
}

Check check_falling_factorial(const StirlingTable& table, int n_cap) {
  const int top = std::min(12, n_cap);
  for (int n = 1; n <= top; ++n) {
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, BigInt(0));
    for (int k = 1; k <= n; ++k) {
      BigInt c = table.stirling_first(n, k);
      if ((n - k) % 2 != 0) c = -c;
      coeffs[static_cast<size_t>(k)] = std::move(c);
    }
    Poly falling = Poly::monomial(1, 1, Var::x);
    for (int i = 1; i < n; ++i) {
      falling = falling * Poly({BigInt(-i), BigInt(1)}, Var::x);
    }
    if (Poly(std::move(coeffs), Var::x) != falling) {
      return {"falling-factorial-signs", CheckStatus::Fail,
              "signed row n = " + std::to_string(n) +
                  " does not expand to x(x-1)...(x-n+1)"};
    }
  }
  return {"falling-factorial-signs", CheckStatus::Pass, ""};
}

Check check_burnside(int n_cap) {
  const int top = std::min(6, n_cap);
  for (int n = 1; n <= top; ++n) {
    for (int x = 1; x <= 5; ++x) {
      if (!burnside_multiset_check(n, x)) {
        return {"burnside-fixed-points", CheckStatus::Fail,
                "mismatch at n = " + std::to_string(n) + ", x = " + std::to_string(x)};
      }
    }
  }
  return {"burnside-fixed-points", CheckStatus::Pass, ""};
}

Check check_oracle_fn(const StirlingTable& table, long long budget) {
  try {
    for (int n = 1; n <= 5; ++n) {
      for (int x = 0; x <= 8; ++x) {
        if (!fn_oracle_identity(table, n, x, budget)) {
          return {"oracle-distinct-tuples", CheckStatus::Fail,
                  "count and class value differ at n = " + std::to_string(n) +
                      ", x = " + std::to_string(x)};
        }
      }
    }
  } catch (const BudgetError& e) {
    return {"oracle-distinct-tuples", CheckStatus::Skip, e.what()};
  }
  return {"oracle-distinct-tuples", CheckStatus::Pass, ""};
}

Check check_oracle_fn0(const StirlingTable& table, long long budget) {
  static constexpr std::pair<int, int> kCases[] = {
      {1, 1}, {2, 2}, {2, 4}, {3, 6}, {4, 12}};
  try {
    for (const auto& [n, N] : kCases) {
      if (!fn0_oracle_identity(table, n, N, budget)) {
        return {"oracle-sumzero-tuples", CheckStatus::Fail,
                "count and class value differ at n = " + std::to_string(n) +
                    ", N = " + std::to_string(N)};
      }
    }
  } catch (const BudgetError& e) {
    return {"oracle-sumzero-tuples", CheckStatus::Skip, e.what()};
  }
  return {"oracle-sumzero-tuples", CheckStatus::Pass, ""};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.n_max < 1) throw RangeError("verification needs n_max >= 1");
  StirlingTable table(opts.n_max);
  std::vector<CheckResult> results;
  results.push_back(check_table_parity(table, Space::FN, opts.n_max));
  results.push_back(check_table_parity(table, Space::FN0, opts.n_max));
  results.push_back(check_dual_path_s(table, opts.n_max));
  results.push_back(check_dual_path_sm(table, opts.n_max));
  results.push_back(check_mobius_paths(opts.n_max));
  results.push_back(check_mobius_defining_relation(opts.n_max));
  results.push_back(check_rising_factorial(table, opts.n_max));
  results.push_back(check_falling_factorial(table, opts.n_max));
  results.push_back(check_burnside(opts.n_max));
  results.push_back(check_oracle_fn(table, opts.oracle_budget));
  results.push_back(check_oracle_fn0(table, opts.oracle_budget));
  return results;
}

}  // namespace confpoly
