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

#include "motive.hpp"

#include "errors.hpp"

namespace confpoly {

std::string space_name(Space space) {
  return space == Space::FN ? "fn" : "fn0";
}

ClassPolynomial class_fn(const StirlingTable& table, int n) {
  if (n < 0 || n > table.n_max()) {
    throw RangeError("class_fn needs 0 <= n <= " + std::to_string(table.n_max()));
  }
  if (n == 0) return {Poly::constant(1, Var::X), 0, Space::FN};
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, BigInt(0));
  for (int k = 1; k <= n; ++k) {
    BigInt c = table.stirling_first(n, k);
    if ((n - k) % 2 != 0) c = -c;
    coeffs[static_cast<size_t>(k)] = std::move(c);
  }
  return {Poly(std::move(coeffs), Var::X), n, Space::FN};
}

ClassPolynomial class_fn0(const StirlingTable& table, int n) {
  if (n < 0 || n > table.n_max()) {
    throw RangeError("class_fn0 needs 0 <= n <= " + std::to_string(table.n_max()));
  }
  if (n == 0) return {Poly::constant(1, Var::E), 0, Space::FN0};
  const auto row = table.stirling_mod_row(n);
  std::vector<BigInt> coeffs(static_cast<size_t>(n), BigInt(0));
  for (int k = 1; k <= n; ++k) {
    BigInt c = row[static_cast<size_t>(k) - 1];
    if ((n - k) % 2 != 0) c = -c;
    coeffs[static_cast<size_t>(k) - 1] = std::move(c);
  }
  return {Poly(std::move(coeffs), Var::E), n, Space::FN0};
}

ClassPolynomial class_of(const StirlingTable& table, Space space, int n) {
  return space == Space::FN ? class_fn(table, n) : class_fn0(table, n);
}

Poly poincare_elliptic_curve() {
  return Poly({BigInt(1), BigInt(2), BigInt(1)}, Var::x);
}

Poly virtual_poincare(const ClassPolynomial& c, const Poly& sx) {
  if (sx.var() != Var::x) {
    throw VarMismatchError("virtual_poincare expects S(X) in variable 'x'");
  }
  return c.poly.compose(sx);
}

std::vector<std::string> table_rows(const StirlingTable& table, Space space,
                                    int n_from, int n_to, PolyFormat format) {
  if (n_from < 1 || n_from > n_to || n_to > table.n_max()) {
    throw RangeError("table rows need 1 <= n_from <= n_to <= " +
                     std::to_string(table.n_max()));
  }
  std::vector<std::string> rows;
  rows.reserve(static_cast<size_t>(n_to - n_from) + 1);
  for (int n = n_from; n <= n_to; ++n) {
    rows.push_back(class_of(table, space, n).poly.with_var(Var::E).render(format));
  }
  return rows;
}

}  // namespace confpoly
