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

#ifndef QDC_EXACT_RATIONAL_H_
#define QDC_EXACT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "qdc/exact/bigint.h"

namespace qdc {

// Exact fraction, canonical at all times: gcd(|num|, den) = 1, den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}   // NOLINT(runtime/explicit)
  Rational(long v) : v_(v) {}  // NOLINT(runtime/explicit)
  Rational(long long v) : Rational(BigInt(v)) {}  // NOLINT
  Rational(const BigInt& v) : v_(v.mpz()) {}      // NOLINT
  // Throws DivisionByZeroError when den == 0.
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "num/den" or "num" in base 10. Throws ParseError.
  static Rational FromString(std::string_view text);

  BigInt num() const { return BigInt(v_.get_num()); }
  BigInt den() const { return BigInt(v_.get_den()); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "num/den", with the denominator omitted when it is 1.
  std::string ToString() const;
  const mpq_class& mpq() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline Rational RatAdd(const Rational& a, const Rational& b) { return a + b; }
inline Rational RatMul(const Rational& a, const Rational& b) { return a * b; }
// Throws DivisionByZeroError when b == 0.
inline Rational RatDiv(const Rational& a, const Rational& b) { return a / b; }

// x = floor + frac with 0 <= frac < 1; floor rounds toward -infinity.
struct FloorParts {
  BigInt floor;
  Rational frac;
};
FloorParts FracFloorParts(const Rational& x);

// Integer power; negative exponents invert (DivisionByZeroError on 0).
Rational Pow(const Rational& base, long exponent);

}  // namespace qdc

#endif  // QDC_EXACT_RATIONAL_H_
