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

#include "poly.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace confpoly {

char var_name(Var v) { return static_cast<char>(v); }

Var var_from_char(char c) {
  switch (c) {
    case 'X': return Var::X;
    case 'E': return Var::E;
    case 'x': return Var::x;
    default:
      throw PreconditionError(std::string("unknown variable tag '") + c + "'");
  }
}

Poly::Poly(std::vector<BigInt> coeffs, Var var)
    : coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

Poly Poly::constant(BigInt c, Var var) {
  Poly p(var);
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(BigInt c, int deg, Var var) {
  if (deg < 0) throw PreconditionError("monomial degree must be >= 0");
  Poly p(var);
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

const BigInt& Poly::coeff(int i) const {
  static const BigInt kZero = 0;
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

Poly Poly::with_var(Var var) const {
  Poly p(var);
  p.coeffs_ = coeffs_;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same_var(const Poly& rhs) const {
  if (var_ != rhs.var_) {
    throw VarMismatchError(std::string("polynomial arithmetic mixes variables '") +
                           var_name(var_) + "' and '" + var_name(rhs.var_) + "'");
  }
}

Poly Poly::operator-() const {
  Poly r(var_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Poly Poly::operator+(const Poly& rhs) const {
  check_same_var(rhs);
  Poly r(var_);
  const size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
  r.coeffs_.assign(n, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) r.coeffs_[i] += rhs.coeffs_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  check_same_var(rhs);
  Poly r(var_);
  if (is_zero() || rhs.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const BigInt& scalar) const {
  Poly r(var_);
  if (scalar == 0) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c * scalar);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PreconditionError("polynomial exponent must be >= 0");
  Poly r = Poly::constant(1, var_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BigInt Poly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * t + coeffs_[i];
  }
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc = Poly::zero(inner.var_);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * inner + Poly::constant(coeffs_[i], inner.var_);
  }
  return acc;
}

namespace {

// Shared by the plain and LaTeX renderers; LaTeX braces exponents >= 10
// so that multi-digit powers typeset correctly.
std::string render_terms(const Poly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      out << var_name(p.var());
      if (i >= 2) {
        if (latex && i >= 10) {
          out << "^{" << i << "}";
        } else {
          out << "^" << i;
        }
      }
    }
  }
  return out.str();
}

std::string render_json_array(const Poly& p) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out << ", ";
    out << p.coeffs()[i].str();
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string Poly::render(PolyFormat format) const {
  switch (format) {
    case PolyFormat::Plain: return render_terms(*this, false);
    case PolyFormat::Latex: return "$" + render_terms(*this, true) + "$";
    case PolyFormat::Json: return render_json_array(*this);
  }
  throw PreconditionError("unknown polynomial format");
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

BigInt parse_integer_token(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw PreconditionError("expected an integer in coefficient array");
  return BigInt(s.substr(start, pos - start));
}

BigInt parse_string_token(const std::string& s, size_t& pos) {
  ++pos;  // opening quote
  size_t start = pos;
  while (pos < s.size() && s[pos] != '"') ++pos;
  if (pos >= s.size()) throw PreconditionError("unterminated string in coefficient array");
  std::string body = s.substr(start, pos - start);
  ++pos;  // closing quote
  if (body.empty()) throw PreconditionError("empty coefficient string");
  size_t check = body[0] == '-' || body[0] == '+' ? 1 : 0;
  if (check == body.size()) throw PreconditionError("malformed coefficient string");
  for (; check < body.size(); ++check) {
    if (!std::isdigit(static_cast<unsigned char>(body[check]))) {
      throw PreconditionError("coefficient string is not a decimal integer: \"" + body + "\"");
    }
  }
  return BigInt(body);
}

}  // namespace

Poly poly_from_coeff_json(const std::string& text, Var var) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[') {
    throw PreconditionError("coefficient array must start with '['");
  }
  ++pos;
  std::vector<BigInt> coeffs;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '"') {
        coeffs.push_back(parse_string_token(text, pos));
      } else {
        coeffs.push_back(parse_integer_token(text, pos));
      }
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw PreconditionError("expected ',' or ']' in coefficient array");
    }
  }
  skip_ws(text, pos);
  if (pos != text.size()) {
    throw PreconditionError("trailing characters after coefficient array");
  }
  return Poly(std::move(coeffs), var);
}

}  // namespace confpoly
