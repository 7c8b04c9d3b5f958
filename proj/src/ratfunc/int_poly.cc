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

#include "qdc/ratfunc/int_poly.h"

#include <algorithm>
#include <string>
#include <utility>

#include "qdc/error.h"

namespace qdc {
namespace {

void CheckDegree(long degree) {
  if (degree > kMaxPolyDegree) {
    throw ResourceError("polynomial degree " + std::to_string(degree) +
                        " exceeds limit " + std::to_string(kMaxPolyDegree));
  }
}

// Symmetric xi-adic digits of g: the candidate gcd of the heuristic method.
IntPoly SymmetricDigits(mpz_class g, const mpz_class& xi) {
  std::vector<mpz_class> digits;
  mpz_class half = xi / 2;
  while (g != 0) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    digits.push_back(r);
    g -= r;
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
  }
  return IntPoly(std::move(digits));
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  Trim();
}

IntPoly IntPoly::Constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::Monomial(const mpz_class& c, long degree) {
  CheckDegree(degree);
  std::vector<mpz_class> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::Trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpz_class IntPoly::Content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::PrimitivePart() const {
  if (is_zero()) return {};
  mpz_class g = Content();
  if (sgn(lc()) < 0) g = -g;
  if (g == 1) return *this;
  IntPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

mpz_class IntPoly::MaxNorm() const {
  mpz_class m = 0;
  for (const auto& c : c_) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

mpz_class IntPoly::Eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::SubstPower(long d) const {
  if (d < 1) throw PreconditionError("substitution power must be >= 1");
  if (d == 1 || degree() <= 0) return *this;
  CheckDegree(degree() * d);
  std::vector<mpz_class> v(static_cast<size_t>(degree() * d) + 1);
  for (size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  CheckDegree(a.degree() + b.degree());
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                 b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  if (sgn(s) == 0) return {};
  IntPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::optional<IntPoly> ExactQuotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  long db = b.degree();
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - db) + 1);
  mpz_class t;
  for (long k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = r[static_cast<size_t>(k + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                 bc[static_cast<size_t>(j)].get_mpz_t());
    }
    q[static_cast<size_t>(k)] = t;
  }
  for (long j = 0; j < db; ++j) {
    if (sgn(r[static_cast<size_t>(j)]) != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly PseudoRemainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  long db = b.degree();
  while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
    long dr = static_cast<long>(r.size()) - 1;
    mpz_class top = r.back();
    for (auto& c : r) c *= b.lc();
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<size_t>(dr - db + j)].get_mpz_t(),
                 top.get_mpz_t(), bc[static_cast<size_t>(j)].get_mpz_t());
    }
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly PrsGcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0.PrimitivePart();
  IntPoly b = b0.PrimitivePart();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = PseudoRemainder(a, b).PrimitivePart();
    a = std::move(b);
    b = std::move(r);
  }
  return a.PrimitivePart();
}

IntPoly PrimitiveGcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) {
    throw PreconditionError("gcd of two zero polynomials");
  }
  if (a0.is_zero()) return b0.PrimitivePart();
  if (b0.is_zero()) return a0.PrimitivePart();
  IntPoly a = a0.PrimitivePart();
  IntPoly b = b0.PrimitivePart();
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::Constant(1);
  if (a == b) return a;
  if (auto q = ExactQuotient(a, b)) return b;
  if (auto q = ExactQuotient(b, a)) return a;

  mpz_class bound = std::min(a.MaxNorm(), b.MaxNorm());
  mpz_class xi = 2 * bound + 29;
  long max_deg = std::max(a.degree(), b.degree());
  for (int attempt = 0; attempt < 6; ++attempt) {
    // Keep evaluations within a few megabits.
    if (static_cast<double>(mpz_sizeinbase(xi.get_mpz_t(), 2)) *
            static_cast<double>(max_deg) > 4.0e6) {
      break;
    }
    mpz_class va = a.Eval(xi);
    mpz_class vb = b.Eval(xi);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    IntPoly cand = SymmetricDigits(g, xi).PrimitivePart();
    if (!cand.is_zero() && ExactQuotient(a, cand) && ExactQuotient(b, cand)) {
      return cand;
    }
    xi = xi * 73794 / 27011;
  }
  return PrsGcd(a, b);
}

}  // namespace qdc
