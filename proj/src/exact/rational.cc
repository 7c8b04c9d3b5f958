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

#include "qdc/exact/rational.h"

#include "qdc/error.h"

namespace qdc {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZeroError("zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational Rational::FromString(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::FromString(text));
  BigInt n = BigInt::FromString(text.substr(0, slash));
  BigInt d = BigInt::FromString(text.substr(slash + 1));
  return Rational(n, d);
}

std::string Rational::ToString() const {
  if (v_.get_den() == 1) return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

FloorParts FracFloorParts(const Rational& x) {
  BigInt fl = FloorDiv(x.num(), x.den());
  return {fl, x - Rational(fl)};
}

Rational Pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZeroError("zero to a negative power");
    return Pow(Rational(1) / base, -exponent);
  }
  unsigned long e = static_cast<unsigned long>(exponent);
  return Rational(Pow(base.num(), e), Pow(base.den(), e));
}

}  // namespace qdc
