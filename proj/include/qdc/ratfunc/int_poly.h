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

#ifndef QDC_RATFUNC_INT_POLY_H_
#define QDC_RATFUNC_INT_POLY_H_

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qdc {

// Intermediate polynomials above this degree are rejected with ResourceError.
inline constexpr long kMaxPolyDegree = 100000;

// Dense univariate polynomial over Z, degree-ascending, no trailing zeros.
// Working representation behind Poly and RatFunc: arithmetic and GCDs run
// over Z on primitive parts, which avoids rational coefficient blowup.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly Constant(const mpz_class& c);
  static IntPoly Monomial(const mpz_class& c, long degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpz_class& lc() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](size_t i) const { return c_[i]; }

  // Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class Content() const;
  // Divides by the content and makes the leading coefficient positive.
  IntPoly PrimitivePart() const;
  mpz_class MaxNorm() const;

  mpz_class Eval(const mpz_class& x) const;
  // p(x) -> p(x^d).
  IntPoly SubstPower(long d) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void Trim();
  std::vector<mpz_class> c_;
};

// Quotient a / b over Z when b divides a exactly, otherwise nullopt.
std::optional<IntPoly> ExactQuotient(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder of a by b (b nonzero).
IntPoly PseudoRemainder(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient. Heuristic evaluation GCD
// with a primitive-PRS fallback; both inputs may not be zero at once.
IntPoly PrimitiveGcd(const IntPoly& a, const IntPoly& b);

// Primitive remainder sequence GCD; exposed for cross-checking.
IntPoly PrsGcd(const IntPoly& a, const IntPoly& b);

}  // namespace qdc

#endif  // QDC_RATFUNC_INT_POLY_H_
