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

#ifndef CONFPOLY_POLY_HPP
#define CONFPOLY_POLY_HPP

#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace confpoly {

// Symbolic variable tag of a polynomial. "X" is a Grothendieck-ring class
// of an unspecified variety, "E" the class of an elliptic curve, "x" the
// indeterminate of virtual Poincare polynomials. Tags are data attached to
// values; arithmetic on mixed tags throws VarMismatchError.
enum class Var : char { X = 'X', E = 'E', x = 'x' };

char var_name(Var v);
Var var_from_char(char c);

enum class PolyFormat { Plain, Latex, Json };

// Dense univariate polynomial with exact integer coefficients.
// coeffs()[i] is the coefficient of the i-th power; the highest stored
// coefficient is nonzero, and the zero polynomial stores no coefficients.
// Values are immutable after construction.
class Poly {
 public:
  explicit Poly(Var var = Var::x) : var_(var) {}
  Poly(std::vector<BigInt> coeffs, Var var);

  static Poly zero(Var var) { return Poly(var); }
  static Poly constant(BigInt c, Var var);
  // The monomial c * v^deg.
  static Poly monomial(BigInt c, int deg, Var var);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of v^i; zero outside the stored range.
  const BigInt& coeff(int i) const;

  // Same coefficients under a different variable tag.
  Poly with_var(Var var) const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const BigInt& scalar) const;
  Poly pow(int e) const;

  bool operator==(const Poly& rhs) const = default;

  // Exact value of the polynomial at t.
  BigInt eval(const BigInt& t) const;

  // Substitution: this(inner). The result carries inner's variable tag.
  Poly compose(const Poly& inner) const;

  std::string render(PolyFormat format) const;

 private:
  void trim();
  void check_same_var(const Poly& rhs) const;

  std::vector<BigInt> coeffs_;
  Var var_;
};

inline Poly operator*(const BigInt& scalar, const Poly& p) { return p * scalar; }

// Parses a polynomial from a JSON array of coefficients, lowest degree
// first; entries may be JSON integers or decimal strings. Inverse of
// render(PolyFormat::Json). Throws PreconditionError on malformed input.
Poly poly_from_coeff_json(const std::string& text, Var var);

}  // namespace confpoly

#endif  // CONFPOLY_POLY_HPP
