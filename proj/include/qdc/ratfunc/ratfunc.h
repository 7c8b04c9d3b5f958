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

#ifndef QDC_RATFUNC_RATFUNC_H_
#define QDC_RATFUNC_RATFUNC_H_

#include <string>

#include "qdc/exact/rational.h"
#include "qdc/ratfunc/int_poly.h"
#include "qdc/ratfunc/poly.h"

namespace qdc {

// Rational function in one indeterminate, always held in lowest terms.
//
// Stored as scale * num / den with num, den primitive integer polynomials,
// gcd(num, den) = 1 and lc(den) > 0. That triple is unique for each
// function, so equality is structural. The Rational-coefficient view with a
// monic denominator is available through num() and den().
class RatFunc {
 public:
  RatFunc() : den_(IntPoly::Constant(1)) {}
  RatFunc(const Rational& c);  // NOLINT(runtime/explicit)
  RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT(runtime/explicit)
  explicit RatFunc(const Poly& p);
  // Throws PoleError when den is the zero polynomial.
  RatFunc(const Poly& num, const Poly& den);

  // c * var^e; negative e gives c / var^|e|.
  static RatFunc Monomial(const Rational& c, long e);

  bool is_zero() const { return scale_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Numerator with the monic-denominator normalization.
  Poly num() const;
  // Monic denominator.
  Poly den() const;
  long num_degree() const { return num_.degree(); }
  long den_degree() const { return den_.degree(); }

  // Value of the reduced form at q0; PoleError if q0 is a true pole.
  Rational Eval(const Rational& q0) const;
  // var -> var^d, d >= 1.
  RatFunc SubstPower(long d) const;
  // Integer power; PoleError when inverting zero.
  RatFunc Pow(long e) const;
  RatFunc Inverse() const;

  // "num" or "(num)/(den)" over the given variable name.
  std::string ToString(const std::string& var = "q") const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  // Throws PoleError when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatFunc(Rational scale, IntPoly num, IntPoly den);
  static RatFunc Reduce(Rational scale, IntPoly num, IntPoly den);

  Rational scale_;
  IntPoly num_;  // primitive, lc > 0; empty iff the function is zero
  IntPoly den_;  // primitive, lc > 0
};

// (1 - q^{e x}) / (1 - q^e) = 1 + q^e + ... + q^{e(x-1)}.
RatFunc QBracket(long x, long base_exp);

// Evaluate f at q0 (rf_eval).
inline Rational RfEval(const RatFunc& f, const Rational& q0) {
  return f.Eval(q0);
}
inline RatFunc RfSubstPower(const RatFunc& f, long d) {
  return f.SubstPower(d);
}

}  // namespace qdc

#endif  // QDC_RATFUNC_RATFUNC_H_
