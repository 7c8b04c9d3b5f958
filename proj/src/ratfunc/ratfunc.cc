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

#include "qdc/ratfunc/ratfunc.h"

#include <algorithm>
#include <utility>

#include "qdc/error.h"

namespace qdc {
namespace {

IntPoly Quot(const IntPoly& a, const IntPoly& b) {
  auto q = ExactQuotient(a, b);
  if (!q) throw std::logic_error("inexact polynomial quotient");
  return *std::move(q);
}

Rational IntPolyEval(const IntPoly& p, const Rational& x) {
  // Horner with the denominator cleared: sum c_i n^i d^{deg-i}.
  mpz_class n = x.mpq().get_num(), d = x.mpq().get_den();
  mpz_class acc = 0, dpow = 1;
  long deg = p.degree();
  for (long i = deg; i >= 0; --i) {
    acc = acc * n + p[static_cast<size_t>(i)] * dpow;
    dpow *= d;
  }
  // acc / d^deg
  mpz_class dd;
  mpz_pow_ui(dd.get_mpz_t(), d.get_mpz_t(),
             static_cast<unsigned long>(deg < 0 ? 0 : deg));
  return Rational(BigInt(acc), BigInt(dd));
}

}  // namespace

RatFunc::RatFunc(Rational scale, IntPoly num, IntPoly den)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {}

RatFunc RatFunc::Reduce(Rational scale, IntPoly num, IntPoly den) {
  if (den.is_zero()) throw PoleError("rational function with zero denominator");
  if (scale.is_zero() || num.is_zero()) return RatFunc();
  mpz_class cn = num.Content(), cd = den.Content();
  scale *= Rational(BigInt(cn), BigInt(cd));
  if (sgn(num.lc()) < 0) scale = -scale;
  num = num.PrimitivePart();
  IntPoly dp = den.PrimitivePart();
  if (sgn(den.lc()) < 0) scale = -scale;
  IntPoly g = PrimitiveGcd(num, dp);
  if (g.degree() > 0) {
    num = Quot(num, g);
    dp = Quot(dp, g);
  }
  return RatFunc(std::move(scale), std::move(num), std::move(dp));
}

RatFunc::RatFunc(const Rational& c) : RatFunc() {
  if (!c.is_zero()) {
    scale_ = c;
    num_ = IntPoly::Constant(1);
  }
}

RatFunc::RatFunc(const Poly& p) : RatFunc() {
  if (p.is_zero()) return;
  auto [c, prim] = p.ToPrimitive();
  scale_ = c;
  num_ = prim;
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw PoleError("rational function with zero denominator");
  auto [cn, pn] = num.ToPrimitive();
  auto [cd, pd] = den.ToPrimitive();
  *this = num.is_zero() ? RatFunc() : Reduce(cn / cd, pn, pd);
}

RatFunc RatFunc::Monomial(const Rational& c, long e) {
  if (c.is_zero()) return RatFunc();
  if (e >= 0) {
    return RatFunc(c, IntPoly::Monomial(1, e), IntPoly::Constant(1));
  }
  return RatFunc(c, IntPoly::Constant(1), IntPoly::Monomial(1, -e));
}

Poly RatFunc::num() const {
  if (is_zero()) return Poly();
  Rational s = scale_ / Rational(BigInt(den_.lc()));
  return Poly::FromInt(num_, s);
}

Poly RatFunc::den() const {
  return Poly::FromInt(den_, Rational(1) / Rational(BigInt(den_.lc())));
}

Rational RatFunc::Eval(const Rational& q0) const {
  Rational d = IntPolyEval(den_, q0);
  if (d.is_zero()) {
    throw PoleError("pole at q = " + q0.ToString());
  }
  if (is_zero()) return Rational(0);
  return scale_ * IntPolyEval(num_, q0) / d;
}

RatFunc RatFunc::SubstPower(long d) const {
  if (d < 1) throw PreconditionError("substitution power must be >= 1");
  if (d == 1 || is_zero()) return *this;
  // Coprimality survives x -> x^d, so no new gcd is needed.
  return RatFunc(scale_, num_.SubstPower(d), den_.SubstPower(d));
}

RatFunc RatFunc::Inverse() const {
  if (is_zero()) throw PoleError("inverse of the zero rational function");
  Rational s = Rational(1) / scale_;
  IntPoly n = den_, d = num_;
  // Both stay primitive with lc > 0.
  return RatFunc(std::move(s), std::move(n), std::move(d));
}

RatFunc RatFunc::Pow(long e) const {
  if (e < 0) return Inverse().Pow(-e);
  RatFunc result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string RatFunc::ToString(const std::string& var) const {
  Poly n = num();
  Poly d = den();
  if (d.degree() == 0) return n.ToString(var);
  std::string ns = n.ToString(var);
  bool simple = n.coeffs().size() == 1 ||
                (n.coeffs().size() >= 1 &&
                 std::count_if(n.coeffs().begin(), n.coeffs().end(),
                               [](const Rational& c) { return !c.is_zero(); }) == 1);
  if (!simple) ns = "(" + ns + ")";
  return ns + "/(" + d.ToString(var) + ")";
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  IntPoly g1 = PrimitiveGcd(a.num_, b.den_);
  IntPoly g2 = PrimitiveGcd(b.num_, a.den_);
  IntPoly an = Quot(a.num_, g1), bd = Quot(b.den_, g1);
  IntPoly bn = Quot(b.num_, g2), ad = Quot(a.den_, g2);
  return RatFunc(a.scale_ * b.scale_, an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw PoleError("division by the zero rational function");
  return a * b.Inverse();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Henrici: only the gcd of the denominators needs to be split off.
  IntPoly g = PrimitiveGcd(a.den_, b.den_);
  IntPoly ad = Quot(a.den_, g), bd = Quot(b.den_, g);
  mpz_class la = a.scale_.mpq().get_den(), lb = b.scale_.mpq().get_den();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
  mpz_class sa = a.scale_.mpq().get_num() * (l / la);
  mpz_class sb = b.scale_.mpq().get_num() * (l / lb);
  IntPoly t = sa * (a.num_ * bd) + sb * (b.num_ * ad);
  if (t.is_zero()) return RatFunc();
  Rational scale{BigInt(t.Content()), BigInt(l)};
  IntPoly tp = t.PrimitivePart();
  if (sgn(t.lc()) < 0) scale = -scale;
  IntPoly g2 = PrimitiveGcd(tp, g);
  if (g2.degree() > 0) {
    tp = Quot(tp, g2);
    return RatFunc(std::move(scale), std::move(tp), ad * Quot(b.den_, g2));
  }
  return RatFunc(std::move(scale), std::move(tp), ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc QBracket(long x, long base_exp) {
  if (x < 0) throw PreconditionError("q-bracket needs x >= 0");
  if (base_exp < 1) throw PreconditionError("q-bracket base exponent must be >= 1");
  if (x == 0) return RatFunc();
  if ((x - 1) * base_exp > kMaxPolyDegree) {
    throw ResourceError("q-bracket degree exceeds limit");
  }
  std::vector<mpz_class> c(static_cast<size_t>((x - 1) * base_exp) + 1);
  for (long i = 0; i < x; ++i) c[static_cast<size_t>(i * base_exp)] = 1;
  return RatFunc(Poly::FromInt(IntPoly(std::move(c))));
}

}  // namespace qdc
