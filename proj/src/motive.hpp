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

#ifndef CONFPOLY_MOTIVE_HPP
#define CONFPOLY_MOTIVE_HPP

#include <string>
#include <vector>

#include "poly.hpp"
#include "stirling.hpp"

namespace confpoly {

// Which configuration space a class polynomial describes: F_n(X), the
// n-tuples of pairwise-distinct points, or F_n^0(E), the distinct
// n-tuples on an elliptic curve summing to the neutral element.
enum class Space { FN, FN0 };

std::string space_name(Space space);

// Grothendieck-ring class of a configuration space as a polynomial in the
// class of the underlying variety.
//
// FN:  [F_n(X)]   = sum_{k>=1} (-1)^(n-k) s(n,k)   X^k      (variable X)
// FN0: [F_n^0(E)] = sum_{k>=1} (-1)^(n-k) s_m(n,k) E^(k-1)  (variable E)
//
// n = 0 yields the constant 1 for both spaces (the empty configuration).
struct ClassPolynomial {
  Poly poly;
  int n = 0;
  Space space = Space::FN;
};

ClassPolynomial class_fn(const StirlingTable& table, int n);
ClassPolynomial class_fn0(const StirlingTable& table, int n);
ClassPolynomial class_of(const StirlingTable& table, Space space, int n);

// S(E) = 1 + 2x + x^2, the Poincare polynomial of a genus-1 curve.
Poly poincare_elliptic_curve();

// Substitutes sx (a polynomial in "x", the caller's S(X)) for the class
// variable; the result is the virtual Poincare polynomial of the space.
Poly virtual_poincare(const ClassPolynomial& c, const Poly& sx);

// Rows n_from..n_to of the formula table, rendered in the given format.
// Both spaces print their variable as E, matching the usual table layout.
std::vector<std::string> table_rows(const StirlingTable& table, Space space,
                                    int n_from, int n_to, PolyFormat format);

}  // namespace confpoly

#endif  // CONFPOLY_MOTIVE_HPP
