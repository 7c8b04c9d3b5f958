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

#ifndef QDC_PADIC_PADIC_H_
#define QDC_PADIC_PADIC_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdc/exact/bigint.h"
#include "qdc/exact/rational.h"

namespace qdc {

struct PadicConfig {
  long p = 3;
  long precision = 32;  // significant p-digits carried by new values

  // Validates p (odd prime) and precision (>= 1). Throws PreconditionError.
  static PadicConfig Make(long p, long precision = 32);
};

bool IsOddPrime(long p);

// Capped-precision p-adic number: unit * p^valuation + O(p^(valuation +
// precision)), with the unit coprime to p and reduced mod p^precision.
//
// Zero comes in two flavours: the exact zero (infinite valuation, infinite
// precision) and O(p^N), a value known only to vanish to absolute precision
// N. Arithmetic propagates precision honestly: the absolute precision of a
// sum is the smaller of its inputs', and products keep the smaller relative
// precision.
class PadicNum {
 public:
  static constexpr long kInfinitePrecision = INT32_MAX;

  PadicNum() = default;  // exact zero for p = 3
  static PadicNum ExactZero(long p);
  static PadicNum ZeroTo(long p, long absolute_precision);
  static PadicNum One(long p, long precision);
  static PadicNum FromRational(const Rational& x, const PadicConfig& cfg);
  static PadicNum FromInteger(const BigInt& x, const PadicConfig& cfg);
  // Integer known modulo p^absolute_precision.
  static PadicNum FromIntegerMod(const BigInt& x, long p, long absolute_precision);
  static PadicNum FromParts(long p, long valuation, const mpz_class& unit,
                            long precision);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && val_ == kInfinitePrecision; }
  // nullopt encodes the infinite valuation of a zero value.
  std::optional<long> valuation() const;
  // Relative precision in p-digits (0 for zero values).
  long precision() const { return zero_ ? 0 : prec_; }
  long absolute_precision() const { return zero_ ? val_ : val_ + prec_; }
  // Valuation if nonzero, otherwise the absolute precision bound.
  long agreement() const { return val_; }
  const mpz_class& unit() const { return unit_; }
  // Base-p digits of the unit, little-endian, `precision()` of them.
  std::vector<long> digits() const;
  // Nonnegative integer congruent to the value mod p^absolute_precision.
  // Requires valuation >= 0 and finite precision.
  BigInt IntegerRepresentative() const;

  PadicNum CapAbsolute(long absolute_precision) const;

  PadicNum operator-() const;
  friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator-(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
  // Throws DivisionByZeroError when b is zero to its precision.
  friend PadicNum operator/(const PadicNum& a, const PadicNum& b);
  PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
  PadicNum& operator-=(const PadicNum& o) { return *this = *this - o; }
  PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }
  PadicNum& operator/=(const PadicNum& o) { return *this = *this / o; }
  PadicNum Pow(long e) const;
  PadicNum Inverse() const;

  // True when v_p(this - o) >= n (within the known precision).
  bool CongruentTo(const PadicNum& o, long n) const;

  // {p, valuation, digits, precision}; a zero has valuation null.
  nlohmann::ordered_json ToJson() const;
  std::string ToString() const;

 private:
  long p_ = 3;
  bool zero_ = true;
  long val_ = kInfinitePrecision;  // for zero: absolute precision bound
  long prec_ = 0;
  mpz_class unit_;
};

// p-adic valuation of a nonzero rational.
long RationalValuation(const Rational& x, long p);
// Exponent of p in n!.
long FactorialValuation(long n, long p);

// Teichmuller representative w(a): the (p-1)-th root of unity congruent to
// a mod p, found as the fixed point of x -> x^p mod p^K.
PadicNum Teichmuller(const BigInt& a, const PadicConfig& cfg);

// q^x for x in Z_p by the binomial series sum_j C(x,j)(q-1)^j.
// Requires v_p(q-1) >= 1 (ConvergenceError) and v_p(x) >= 0.
PadicNum QPowX(const PadicNum& q, const PadicNum& x, const PadicConfig& cfg);

// b^s for b in 1 + pZ_p and s in Z_p, by the same series.
PadicNum BracketPowS(const PadicNum& b, const PadicNum& s, const PadicConfig& cfg);

// <x : q^alpha> = w(x)^{-1} (1 - q^{alpha x}) / (1 - q^alpha).
PadicNum AngleBracket(const BigInt& x, const PadicNum& q, long alpha,
                      const PadicConfig& cfg);

}  // namespace qdc

#endif  // QDC_PADIC_PADIC_H_
