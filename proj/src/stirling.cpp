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

#include "stirling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace confpoly {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw RangeError("StirlingTable needs n_max >= 1");
  fact_.reserve(static_cast<size_t>(n_max) + 1);
  fact_.push_back(1);
  for (int i = 1; i <= n_max; ++i) fact_.push_back(fact_.back() * i);

  s_.resize(static_cast<size_t>(n_max) + 1);
  s_[0] = {BigInt(1)};
  for (int n = 1; n <= n_max; ++n) {
    s_[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (int k = 1; k <= n; ++k) {
      const auto& prev = s_[static_cast<size_t>(n) - 1];
      BigInt v = prev[static_cast<size_t>(k) - 1];
      if (k < n) v += (n - 1) * prev[static_cast<size_t>(k)];
      s_[static_cast<size_t>(n)][static_cast<size_t>(k)] = std::move(v);
    }
  }
}

void StirlingTable::check_n(int n) const {
  if (n < 0 || n > n_max_) {
    throw RangeError("n = " + std::to_string(n) + " outside table range 0.." +
                     std::to_string(n_max_));
  }
}

const BigInt& StirlingTable::fact(int n) const {
  check_n(n);
  return fact_[static_cast<size_t>(n)];
}

BigInt StirlingTable::stirling_first(int n, int k) const {
  check_n(n);
  if (n == 0) return k == 0 ? BigInt(1) : BigInt(0);
  if (k < 1 || k > n) return 0;
  return s_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt StirlingTable::stirling_first_by_shapes(int n, int k) const {
  check_n(n);
  if (n == 0) return k == 0 ? BigInt(1) : BigInt(0);
  if (k < 1 || k > n) return 0;
  BigInt sum = 0;
  for_each_shape(n, [&](const Shape& shape) {
    if (shape.length() != k) return;
    BigInt weight = 1;
    for (int part : shape.parts()) weight *= fact_[static_cast<size_t>(part) - 1];
    sum += shape.multiplicity() * weight;
  });
  return sum;
}

std::vector<BigInt> StirlingTable::compute_mod_row(int n) const {
  std::vector<BigInt> row(static_cast<size_t>(n), BigInt(0));
  for_each_shape(n, [&](const Shape& shape) {
    // multiplicity(shape) * gcd(shape)^2 * prod_i (part_i - 1)!
    BigInt denom = 1;
    BigInt weight = 1;
    int run = 0;
    const auto& parts = shape.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      denom *= fact_[static_cast<size_t>(parts[i])];
      weight *= fact_[static_cast<size_t>(parts[i]) - 1];
      ++run;
      if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
        denom *= fact_[static_cast<size_t>(run)];
        run = 0;
      }
    }
    const int g = shape.gcd();
    row[static_cast<size_t>(shape.length()) - 1] +=
        (fact_[static_cast<size_t>(n)] / denom) * (g * g) * weight;
  });
  return row;
}

BigInt StirlingTable::stirling_mod(int n, int k) const {
  check_n(n);
  if (n == 0) return k == 0 ? BigInt(1) : BigInt(0);
  if (k < 1 || k > n) return 0;
  return stirling_mod_row(n)[static_cast<size_t>(k) - 1];
}

std::vector<BigInt> StirlingTable::stirling_first_row(int n) const {
  check_n(n);
  if (n < 1) throw RangeError("triangle rows start at n = 1");
  std::vector<BigInt> row;
  row.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) row.push_back(stirling_first(n, k));
  return row;
}

std::vector<BigInt> StirlingTable::stirling_mod_row(int n) const {
  check_n(n);
  if (n < 1) throw RangeError("triangle rows start at n = 1");
  std::lock_guard<std::mutex> lock(mod_mutex_);
  auto it = mod_rows_.find(n);
  if (it == mod_rows_.end()) {
    it = mod_rows_.emplace(n, compute_mod_row(n)).first;
  }
  return it->second;
}

BigInt stirling_mod_oracle(int n, int k, int limit) {
  if (n < 1) throw RangeError("stirling_mod_oracle needs n >= 1");
  if (n > limit) {
    throw BudgetError("set-partition Stirling oracle limited to n <= " +
                      std::to_string(limit) + ", got n = " + std::to_string(n));
  }
  if (k < 1 || k > n) return 0;
  BigInt sum = 0;
  for_each_set_partition(
      n,
      [&](const SetPartition& sigma) {
        const auto sizes = sigma.block_sizes();
        int g = 0;
        BigInt weight = 1;
        for (int size : sizes) {
          g = std::gcd(g, size);
          weight *= factorial(size - 1);
        }
        sum += BigInt(g) * g * weight;
      },
      k, std::max(limit, n));
  return sum;
}

Poly rising_factorial(int n) {
  if (n < 1) throw RangeError("rising_factorial needs n >= 1");
  Poly p = Poly::monomial(1, 1, Var::x);  // x
  for (int i = 1; i < n; ++i) {
    p = p * Poly({BigInt(i), BigInt(1)}, Var::x);  // times (x + i)
  }
  return p;
}

bool burnside_multiset_check(int n, int x) {
  if (n < 1 || x < 1) throw RangeError("burnside check needs n, x >= 1");
  if (n > kBurnsideMaxN || x > kBurnsideMaxX) {
    throw BudgetError("burnside check limited to n <= " + std::to_string(kBurnsideMaxN) +
                      ", x <= " + std::to_string(kBurnsideMaxX));
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> seen(static_cast<size_t>(n));
  BigInt fixed_points = 0;
  do {
    std::fill(seen.begin(), seen.end(), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
      }
    }
    fixed_points += ipow(x, cycles);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed_points == rising_factorial(n).eval(x);
}

}  // namespace confpoly
