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

#include "qdc/ratfunc/poly.h"

#include <algorithm>

#include "qdc/error.h"

namespace qdc {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { Trim(); }

void Poly::Trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::Monomial(const Rational& c, long degree) {
  if (degree < 0) throw PreconditionError("negative monomial degree");
  if (degree > kMaxPolyDegree) {
    throw ResourceError("polynomial degree exceeds limit");
  }
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::FromCoefficientStrings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(Rational::FromString(s));
  return Poly(std::move(v));
}

Rational Poly::coeff(long i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational Poly::Eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::Monic() const {
  if (is_zero()) return {};
  Rational inv = Rational(1) / lc();
  return inv * (*this);
}

Poly Poly::SubstPower(long d) const {
  auto [content, prim] = ToPrimitive();
  return FromInt(prim.SubstPower(d), content);
}

std::string Poly::ToString(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (mono.empty()) {
      out += mag.ToString();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.ToString() + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> Poly::ToCoefficientStrings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.ToString());
  return out;
}

std::pair<Rational, IntPoly> Poly::ToPrimitive() const {
  if (is_zero()) return {Rational(0), IntPoly{}};
  mpz_class l = 1;
  for (const auto& c : c_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.mpq().get_den_mpz_t());
  }
  std::vector<mpz_class> ints(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    ints[i] = c_[i].mpq().get_num() * (l / c_[i].mpq().get_den());
  }
  IntPoly p(std::move(ints));
  mpz_class g = p.Content();
  if (sgn(p.lc()) < 0) g = -g;
  IntPoly prim = p.PrimitivePart();
  Rational content{BigInt(g), BigInt(l)};
  return {content, prim};
}

Poly Poly::FromInt(const IntPoly& p, const Rational& scale) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(scale * Rational(BigInt(c)));
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [ca, pa] = a.ToPrimitive();
  auto [cb, pb] = b.ToPrimitive();
  return Poly::FromInt(pa * pb, ca * cb);
}

Poly operator*(const Rational& s, const Poly& a) {
  if (s.is_zero()) return {};
  Poly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  Rational inv = Rational(1) / b.lc();
  long db = b.degree();
  for (long k = a.degree() - db; k >= 0; --k) {
    Rational t = r[static_cast<size_t>(k + db)] * inv;
    if (t.is_zero()) continue;
    q[static_cast<size_t>(k)] = t;
    for (long j = 0; j <= db; ++j) {
      r[static_cast<size_t>(k + j)] -= t * b.coeffs()[static_cast<size_t>(j)];
    }
  }
  r.resize(static_cast<size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly PolyGcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw PreconditionError("gcd of two zero polynomials");
  }
  IntPoly g = PrimitiveGcd(a.ToPrimitive().second, b.ToPrimitive().second);
  return Poly::FromInt(g).Monic();
}

}  // namespace qdc
