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

#include "qdc/dedekind/dedekind.h"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "qdc/error.h"
#include "qdc/qeuler/euler.h"
#include "qdc/qeuler/qeuler.h"

namespace qdc {

namespace {

void RequireCoprime(long h, long k) {
  if (h < 1 || k < 1) throw PreconditionError("h and k must be positive");
  if (std::gcd(h, k) != 1) {
    throw PreconditionError("gcd(h, k) must be 1, got gcd(" +
                            std::to_string(h) + ", " + std::to_string(k) +
                            ") = " + std::to_string(std::gcd(h, k)));
  }
}

void RequireShape(long m, long alpha) {
  if (m < 0) throw PreconditionError("m must be >= 0");
  if (alpha < 1) throw PreconditionError("alpha must be a positive integer");
}

void RequireQNearOne(const CoeffMode& mode, long p) {
  if (auto* r = std::get_if<RationalAt>(&mode)) {
    Rational d = Rational(1) - r->q0;
    if (d.is_zero() || RationalValuation(d, p) < 1) {
      throw ConvergenceError("need v_p(1 - q) >= 1 for p = " +
                             std::to_string(p));
    }
  } else if (auto* pm = std::get_if<PadicMode>(&mode); pm && pm->cfg.p != p) {
    throw PreconditionError("p differs from the p-adic mode prime");
  }
}

// C(s, j) in Z_p from an integer representative of s.
PadicNum SeriesBinomial(const BigInt& s_rep, long s_abs, long j, long p,
                        long cap) {
  mpz_class b;
  mpz_bin_ui(b.get_mpz_t(), s_rep.mpz().get_mpz_t(),
             static_cast<unsigned long>(j));
  long known = std::min(cap, s_abs - FactorialValuation(j, p));
  if (known <= 0) return PadicNum::ZeroTo(p, 0);
  return PadicNum::FromIntegerMod(BigInt(b), p, known);
}

}  // namespace

const char* CTildeVariantName(CTildeVariant v) {
  switch (v) {
    case CTildeVariant::kNaive: return "naive";
    case CTildeVariant::kInterpolated: return "interpolated";
    case CTildeVariant::kInterpolatedCorrected: return "interpolated_corrected";
  }
  return "unknown";
}

CTildeVariant ParseCTildeVariant(const std::string& name) {
  if (name == "naive") return CTildeVariant::kNaive;
  if (name == "interpolated") return CTildeVariant::kInterpolated;
  if (name == "interpolated_corrected") {
    return CTildeVariant::kInterpolatedCorrected;
  }
  throw ParseError("unknown C-tilde variant '" + name + "'");
}

Rational DcSumClassical(long m, long h, long k) {
  RequireCoprime(h, k);
  if (m < 0) throw PreconditionError("m must be >= 0");
  Rational sum;
  for (long M = 1; M < k; ++M) {
    Rational term = Rational(BigInt(M), BigInt(k)) *
                    PeriodicEuler(m, Rational(BigInt(h * M), BigInt(k)));
    sum = (M % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

QEulerValue JSum(long m, long h, long k, long alpha, long l,
                 const CoeffMode& mode) {
  RequireCoprime(h, k);
  RequireShape(m, alpha);
  if (l < 1) throw PreconditionError("base exponent l must be >= 1");
  if (KindOf(mode) != ModeKind::kSymbolic && l % k != 0) {
    throw PreconditionError("k must divide l outside symbolic mode");
  }
  long scale = k / std::gcd(k, l);
  return WithContext(mode, scale, [&](const auto& c) {
    return engine::DcSumQ(c, m, h, k, alpha, l);
  });
}

QEulerValue CTildeInteger(long m, long a, long n, long alpha, long p,
                          CTildeVariant variant, const CoeffMode& mode) {
  RequireShape(m, alpha);
  PadicConfig::Make(p);
  if (a < 0 || n < 1) throw PreconditionError("need a >= 0 and N >= 1");
  if (static_cast<double>(p) * n * (m + 1) * alpha > kMaxPolyDegree) {
    throw ResourceError("p N (m+1) alpha exceeds the degree limit");
  }
  return WithContext(mode, 1, [&](const auto& c) {
    return engine::CTildeInteger(c, m, a, n, alpha, p, variant);
  });
}

SeriesValue CTildeSeries(const PadicNum& s, long a, long n, long alpha,
                         const PadicNum& q, long j_trunc,
                         const PadicConfig& cfg) {
  if (a < 1 || n < 1) throw PreconditionError("a and N must be positive");
  if (alpha < 1) throw PreconditionError("alpha must be a positive integer");
  if (j_trunc < 0) throw PreconditionError("J_trunc must be >= 0");
  const long p = cfg.p;
  if (a % p == 0) throw PreconditionError("gcd(a, p) must be 1");
  if (s.prime() != p || q.prime() != p) {
    throw PreconditionError("s and q must use the configured prime");
  }
  if (!s.is_zero() && *s.valuation() < 0) {
    throw PreconditionError("s must lie in Z_p");
  }
  engine::PadicContext c(q, cfg);

  BigInt s_rep = s.is_zero() ? BigInt(0) : s.IntegerRepresentative();
  long s_abs = std::min(s.absolute_precision(), cfg.precision);

  long terms_needed;
  long guaranteed = cfg.precision;
  if (n % p == 0) {
    long v_ratio = engine::Bracket(c, Rational(n), alpha).agreement();
    terms_needed = (cfg.precision + v_ratio - 1) / v_ratio;
    if (terms_needed > j_trunc + 1) {
      terms_needed = j_trunc + 1;
      guaranteed = std::min(guaranteed, terms_needed * v_ratio);
    }
  } else {
    if (!s_rep.fits_int64() || s_rep.to_int64() > j_trunc) {
      throw ConvergenceError(
          "series in s does not converge when p does not divide N unless s "
          "is a nonnegative integer <= J_trunc");
    }
    terms_needed = s_rep.to_int64() + 1;
  }

  PadicNum exponent = n % p == 0 ? s : PadicNum::FromInteger(s_rep, cfg);
  PadicNum prefix =
      Teichmuller(BigInt(a), cfg).Inverse() *
      BracketPowS(AngleBracket(BigInt(a), q, alpha, cfg), exponent, cfg);
  PadicNum ratio = c.Div(engine::Bracket(c, Rational(n), alpha),
                         engine::Bracket(c, Rational(a), alpha));
  PadicNum step = c.QPow(Rational(alpha * a)) * ratio;
  auto euler = engine::QEulerNumbersByRecurrence(c, terms_needed - 1, alpha, n);

  PadicNum sum = PadicNum::ExactZero(p);
  PadicNum power = PadicNum::One(p, cfg.precision);
  for (long j = 0; j < terms_needed; ++j) {
    PadicNum binom =
        n % p == 0
            ? SeriesBinomial(s_rep, s_abs, j, p, cfg.precision)
            : PadicNum::FromInteger(Binomial(s_rep.to_int64(), j), cfg);
    sum += binom * power * euler[j];
    power *= step;
  }
  PadicNum value = (prefix * sum).CapAbsolute(guaranteed);
  return {value, terms_needed, value.absolute_precision()};
}

QEulerValue JPadic(long m, long h, long k, long alpha, long p,
                   CTildeVariant variant, const CoeffMode& mode) {
  RequireCoprime(h, k);
  RequireShape(m, alpha);
  PadicConfig::Make(p);
  if (k % p == 0) throw PreconditionError("p must not divide k");
  if ((m + 1) % (p - 1) != 0) {
    throw PreconditionError("need m + 1 = 0 mod p - 1");
  }
  RequireQNearOne(mode, p);
  return WithContext(mode, 1, [&](const auto& c) {
    return engine::DefinitionSum(c, m, h, k, alpha, p, variant);
  });
}

PadicNum JPadic(long m, long h, long k, long alpha, const Rational& q,
                const PadicConfig& cfg, CTildeVariant variant) {
  QEulerValue v = JPadic(m, h, k, alpha, cfg.p, variant, RationalAt{q});
  return PadicNum::FromRational(v.rational(), cfg);
}

SeriesValue JPadicSeries(const PadicNum& s, long h, long k, long alpha,
                         const PadicNum& q, long j_trunc,
                         const PadicConfig& cfg) {
  RequireCoprime(h, k);
  if (k % cfg.p == 0) throw PreconditionError("p must not divide k");
  engine::PadicContext c(q, cfg);
  PadicNum sum = PadicNum::ExactZero(cfg.p);
  long terms = 0;
  for (long M = 1; M < k; ++M) {
    long a = engine::Mod(h * M, k);
    if (a % cfg.p == 0) {
      throw PreconditionError("p divides (hM)_k for M = " + std::to_string(M));
    }
    SeriesValue t = CTildeSeries(s, a, k, alpha, q, j_trunc, cfg);
    terms += t.terms;
    PadicNum term = engine::Bracket(c, Rational(M), alpha) * t.value;
    sum = (M % 2 == 1) ? sum + term : sum - term;
  }
  return {sum, terms, sum.absolute_precision()};
}

}  // namespace qdc
