// Copyright 2026 The qdc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDC_RATFUNC_POLY_H_
#define QDC_RATFUNC_POLY_H_

#include <string>
#include <utility>
#include <vector>

#include "qdc/exact/rational.h"
#include "qdc/ratfunc/int_poly.h"

namespace qdc {

// Univariate polynomial over Rational, degree-ascending. The zero polynomial
// is the empty coefficient sequence; otherwise the leading coefficient is
// nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly Constant(const Rational& c) { return Poly({c}); }
  // c * var^degree
  static Poly Monomial(const Rational& c, long degree);
  // Parses a JSON-style list of "num/den" strings, degree-ascending.
  static Poly FromCoefficientStrings(const std::vector<std::string>& coeffs);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& lc() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of var^i (zero beyond the degree).
  Rational coeff(long i) const;

  Rational Eval(const Rational& x) const;
  Poly Monic() const;
  Poly SubstPower(long d) const;

  // Writes the polynomial as text, e.g. "1+q^2", "x^2-x", "-1/2+x".
  std::string ToString(const std::string& var = "q") const;
  // Degree-ascending "num/den" strings.
  std::vector<std::string> ToCoefficientStrings() const;

  // Splits into content * primitive integer polynomial (content > 0 unless
  // the polynomial is zero).
  std::pair<Rational, IntPoly> ToPrimitive() const;
  static Poly FromInt(const IntPoly& p, const Rational& scale = Rational(1));

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void Trim();
  std::vector<Rational> c_;
};

// Quotient and remainder over Rational. Throws DivisionByZeroError.
std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b);

// Monic gcd. Throws PreconditionError if both inputs are zero.
Poly PolyGcd(const Poly& a, const Poly& b);

}  // namespace qdc

#endif  // QDC_RATFUNC_POLY_H_
