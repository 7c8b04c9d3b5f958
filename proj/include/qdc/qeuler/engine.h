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

#ifndef QDC_QEULER_ENGINE_H_
#define QDC_QEULER_ENGINE_H_

// Mode-generic formulas. Every function takes a context that fixes what "q"
// is (a rational number, an indeterminate, or a p-adic number) and returns
// values of the context's Value type.

#include <vector>

#include "qdc/error.h"
#include "qdc/exact/rational.h"
#include "qdc/padic/padic.h"
#include "qdc/qeuler/mode.h"
#include "qdc/ratfunc/ratfunc.h"

namespace qdc::engine {

class RationalContext {
 public:
  using Value = Rational;
  explicit RationalContext(Rational q0) : q0_(std::move(q0)) {}

  Value Const(const Rational& c) const { return c; }
  Value QPow(const Rational& e) const;
  Value Div(const Value& a, const Value& b) const;
  bool IsZero(const Value& v) const { return v.is_zero(); }
  const Rational& q0() const { return q0_; }

 private:
  Rational q0_;
};

class SymbolicContext {
 public:
  using Value = RatFunc;
  // Values are written in Q with q = Q^scale.
  explicit SymbolicContext(long scale = 1);

  Value Const(const Rational& c) const { return RatFunc(c); }
  Value QPow(const Rational& e) const;
  Value Div(const Value& a, const Value& b) const { return a / b; }
  bool IsZero(const Value& v) const { return v.is_zero(); }
  long scale() const { return scale_; }

 private:
  long scale_;
};

class PadicContext {
 public:
  using Value = PadicNum;
  // Throws ConvergenceError unless v_p(1 - q) >= 1.
  PadicContext(PadicNum q, PadicConfig cfg);

  Value Const(const Rational& c) const { return PadicNum::FromRational(c, cfg_); }
  // Integral exponents by repeated squaring, other exponents in Z_p by the
  // binomial series.
  Value QPow(const Rational& e) const;
  Value Div(const Value& a, const Value& b) const;
  bool IsZero(const Value& v) const { return v.is_zero(); }
  const PadicConfig& cfg() const { return cfg_; }
  const PadicNum& q() const { return q_; }

 private:
  PadicNum q_;
  PadicConfig cfg_;
};

inline Rational Binom(long n, long k) {
  return Rational(Binomial(static_cast<unsigned long>(n),
                           static_cast<unsigned long>(k)));
}

template <class Ctx>
typename Ctx::Value Power(const Ctx& c, const typename Ctx::Value& v, long e) {
  typename Ctx::Value r = c.Const(1);
  for (long i = 0; i < e; ++i) r = r * v;
  return r;
}

// sum_{i<n} q^{step * i}
template <class Ctx>
typename Ctx::Value Geometric(const Ctx& c, long n, const Rational& step) {
  typename Ctx::Value sum = c.Const(0);
  for (long i = 0; i < n; ++i) sum = sum + c.QPow(step * Rational(i));
  return sum;
}

// [x]_{q^e} = (1 - q^{e x}) / (1 - q^e).
template <class Ctx>
typename Ctx::Value Bracket(const Ctx& c, const Rational& x, long e) {
  if (x.is_integer() && x.sign() >= 0 && x <= Rational(100000)) {
    return Geometric(c, x.num().to_int64(), Rational(e));
  }
  return c.Div(c.Const(1) - c.QPow(x * Rational(e)),
               c.Const(1) - c.QPow(Rational(e)));
}

// mu_{q^b}(a + M Z_p) = (-q^b)^a (1 + q^b) / (1 + q^{b M}).
template <class Ctx>
typename Ctx::Value Measure(const Ctx& c, long a, long modulus, long b) {
  typename Ctx::Value sign = c.Const(a % 2 == 0 ? 1 : -1);
  return sign * c.Div(c.QPow(Rational(a * b)) * (c.Const(1) + c.QPow(Rational(b))),
                      c.Const(1) + c.QPow(Rational(b * modulus)));
}

// Closed form of the extended q-Euler polynomial at base q^b:
//   (1+q^b)/(1-q^{b alpha})^n sum_l C(n,l)(-1)^l q^{b alpha l y}/(1+q^{b alpha l+b}).
template <class Ctx>
typename Ctx::Value QEuler(const Ctx& c, long n, long alpha, long b,
                           const Rational& y) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long l = 0; l <= n; ++l) {
    V term = c.Div(c.QPow(Rational(b * alpha * l) * y),
                   c.Const(1) + c.QPow(Rational(b * alpha * l + b)));
    Rational coef = Binom(n, l) * Rational(l % 2 == 0 ? 1 : -1);
    sum = sum + c.Const(coef) * term;
  }
  V lead = c.Div(c.Const(1) + c.QPow(Rational(b)),
                 Power(c, c.Const(1) - c.QPow(Rational(b * alpha)), n));
  return lead * sum;
}

// Extended q-Euler numbers E_0..E_n at base q^b from the fermionic
// recurrence E_j (1 + Q^{alpha j + 1}) = -Q sum_{l<j} C(j,l) Q^{alpha l} E_l
// with Q = q^b. Only units are inverted, so p-adic precision is preserved.
template <class Ctx>
std::vector<typename Ctx::Value> QEulerNumbersByRecurrence(const Ctx& c, long n,
                                                           long alpha, long b) {
  using V = typename Ctx::Value;
  std::vector<V> e;
  e.push_back(c.Const(1));
  for (long j = 1; j <= n; ++j) {
    V acc = c.Const(0);
    for (long l = 0; l < j; ++l) {
      acc = acc + c.Const(Binom(j, l)) * c.QPow(Rational(b * alpha * l)) * e[l];
    }
    V rhs = -(c.QPow(Rational(b)) * acc);
    e.push_back(c.Div(rhs, c.Const(1) + c.QPow(Rational(b * (alpha * j + 1)))));
  }
  return e;
}

// Integral of q^{e xi} against mu_{q^b}: (1 + q^b) / (1 + q^{e + b}).
template <class Ctx>
typename Ctx::Value QPowerIntegral(const Ctx& c, const Rational& e, long b) {
  return c.Div(c.Const(1) + c.QPow(Rational(b)),
               c.Const(1) + c.QPow(e + Rational(b)));
}

// Addition form: sum_l C(n,l) q^{alpha l x} E_l [x]_{q^alpha}^{n-l}.
template <class Ctx>
typename Ctx::Value QEulerAdditive(const Ctx& c, long n, long alpha, long x) {
  using V = typename Ctx::Value;
  V br = Bracket(c, Rational(x), alpha);
  V sum = c.Const(0);
  for (long l = 0; l <= n; ++l) {
    V term = c.Const(Binom(n, l)) * c.QPow(Rational(alpha * l * x)) *
             QEuler(c, l, alpha, 1, Rational(0)) * Power(c, br, n - l);
    sum = sum + term;
  }
  return sum;
}

enum class Variant { kPrinted, kCorrected };

// Right side of the d-fold distribution relation for E_{n,q}(x).
//   printed:   (1+q)/(1+q^d) [d]^n sum_a (-1)^a  E_{n,q}  ((x+a)/d)
//   corrected: (1+q)/(1+q^d) [d]^n sum_a (-q)^a  E_{n,q^d}((x+a)/d)
// with [d] = [d]_{q^alpha}.
template <class Ctx>
typename Ctx::Value DistributionRhs(const Ctx& c, long n, long alpha,
                                    const Rational& x, long d, Variant v) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long a = 0; a < d; ++a) {
    Rational y = (x + Rational(a)) / Rational(d);
    V sign = c.Const(a % 2 == 0 ? 1 : -1);
    if (v == Variant::kPrinted) {
      sum = sum + sign * QEuler(c, n, alpha, 1, y);
    } else {
      sum = sum + sign * c.QPow(Rational(a)) * QEuler(c, n, alpha, d, y);
    }
  }
  V factor = c.Div(c.Const(1) + c.QPow(Rational(1)),
                   c.Const(1) + c.QPow(Rational(d)));
  return factor * Power(c, Bracket(c, Rational(d), alpha), n) * sum;
}

}  // namespace qdc::engine

#endif  // QDC_QEULER_ENGINE_H_
