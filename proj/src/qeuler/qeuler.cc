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

#include "qdc/qeuler/qeuler.h"

#include <numeric>
#include <string>

#include "qdc/error.h"

namespace qdc {
namespace engine {

namespace {
constexpr long kMaxExponent = 10000000;

long CheckedExponent(const Rational& e) {
  if (!e.num().fits_int64() || std::labs(e.num().to_int64()) > kMaxExponent) {
    throw ResourceError("exponent too large: " + e.ToString());
  }
  return e.num().to_int64();
}
}  // namespace

Rational RationalContext::QPow(const Rational& e) const {
  if (!e.is_integer()) {
    throw NonRepresentableError("q^(" + e.ToString() +
                                ") is not representable at rational q");
  }
  long k = CheckedExponent(e);
  if (q0_.is_zero() && k < 0) throw PoleError("negative power of q = 0");
  return Pow(q0_, k);
}

Rational RationalContext::Div(const Rational& a, const Rational& b) const {
  if (b.is_zero()) throw PoleError("pole at q = " + q0_.ToString());
  return a / b;
}

SymbolicContext::SymbolicContext(long scale) : scale_(scale) {
  if (scale < 1) throw PreconditionError("symbolic scale must be >= 1");
}

RatFunc SymbolicContext::QPow(const Rational& e) const {
  Rational t = e * Rational(scale_);
  if (!t.is_integer()) {
    throw NonRepresentableError("q^(" + e.ToString() + ") needs q = Q^" +
                                t.den().ToString() + " substitution");
  }
  return RatFunc::Monomial(1, CheckedExponent(t));
}

PadicContext::PadicContext(PadicNum q, PadicConfig cfg)
    : q_(std::move(q)), cfg_(cfg) {
  if (q_.prime() != cfg_.p) throw PreconditionError("q uses a different prime");
  PadicNum d = q_ - PadicNum::One(cfg_.p, cfg_.precision);
  if (d.agreement() < 1) {
    throw ConvergenceError("p-adic q must satisfy v_p(1 - q) >= 1");
  }
}

PadicNum PadicContext::QPow(const Rational& e) const {
  if (e.is_integer()) return q_.Pow(CheckedExponent(e));
  if (mpz_divisible_ui_p(e.mpq().get_den_mpz_t(),
                         static_cast<unsigned long>(cfg_.p))) {
    throw NonRepresentableError("q^(" + e.ToString() + "): exponent not in Z_p");
  }
  return QPowX(q_, PadicNum::FromRational(e, cfg_), cfg_);
}

PadicNum PadicContext::Div(const PadicNum& a, const PadicNum& b) const {
  if (b.is_zero()) {
    throw PoleError("p-adic division by a value that vanishes to precision " +
                    std::to_string(b.absolute_precision()));
  }
  return a / b;
}

}  // namespace engine

namespace {

void RequireWeight(long n, long alpha) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (alpha < 1) throw PreconditionError("alpha must be a positive integer");
}

}  // namespace

long ScaleFor(std::initializer_list<Rational> exponents) {
  long scale = 1;
  for (const auto& e : exponents) {
    scale = std::lcm(scale, e.den().to_int64());
  }
  return scale;
}

QEulerValue Measure(long a, long level, long p, const CoeffMode& mode) {
  PadicConfig::Make(p);
  if (auto* m = std::get_if<PadicMode>(&mode); m && m->cfg.p != p) {
    throw PreconditionError("measure prime differs from the p-adic mode prime");
  }
  if (level < 1) throw PreconditionError("measure level must be >= 1");
  long modulus = 1;
  for (long i = 0; i < level; ++i) {
    if (modulus > kMaxPolyDegree / p) {
      throw ResourceError("p^level exceeds the degree limit");
    }
    modulus *= p;
  }
  if (a < 0 || a >= modulus) throw PreconditionError("need 0 <= a < p^level");
  return WithContext(mode, 1, [&](const auto& c) {
    return engine::Measure(c, a, modulus, 1);
  });
}

QEulerValue QEulerNumber(long n, long alpha, const CoeffMode& mode) {
  RequireWeight(n, alpha);
  return WithContext(mode, 1, [&](const auto& c) {
    return engine::QEuler(c, n, alpha, 1, Rational(0));
  });
}

QEulerValue QEulerPoly(long n, long alpha, const Rational& x,
                       const CoeffMode& mode) {
  RequireWeight(n, alpha);
  return WithContext(mode, ScaleFor({x}), [&](const auto& c) {
    return engine::QEuler(c, n, alpha, 1, x);
  });
}

QEulerValue QEulerPolyAdditive(long n, long alpha, long x, const CoeffMode& mode) {
  RequireWeight(n, alpha);
  if (x < 0) throw PreconditionError("addition form needs integer x >= 0");
  return WithContext(mode, 1, [&](const auto& c) {
    return engine::QEulerAdditive(c, n, alpha, x);
  });
}

QEulerValue DistributionRhs(long n, long alpha, const Rational& x, long d,
                            Variant variant, const CoeffMode& mode) {
  RequireWeight(n, alpha);
  if (d < 1 || d % 2 == 0) throw PreconditionError("d must be odd and positive");
  long scale = ScaleFor({x});
  if (variant == Variant::kPrinted) {
    for (long a = 0; a < d; ++a) {
      scale = std::lcm(scale, ScaleFor({(x + Rational(a)) / Rational(d)}));
    }
  }
  return WithContext(mode, scale, [&](const auto& c) {
    return engine::DistributionRhs(c, n, alpha, x, d, variant);
  });
}

QEulerValue QPowerIntegral(long e, long base, const CoeffMode& mode) {
  if (base < 1) throw PreconditionError("base exponent must be >= 1");
  return WithContext(mode, 1, [&](const auto& c) {
    return engine::QPowerIntegral(c, Rational(e), base);
  });
}

}  // namespace qdc
