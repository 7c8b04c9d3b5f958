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

#include "qdc/padic/padic.h"

#include <algorithm>
#include <cstdlib>

#include "qdc/error.h"

namespace qdc {
namespace {

mpz_class PPow(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(std::max(0L, k)));
  return r;
}

// Removes factors of p from x (nonzero); returns how many were removed.
long StripP(mpz_class& x, long p) {
  mpz_class pp = p;
  return static_cast<long>(
      mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

mpz_class Mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void RequireSamePrime(const PadicNum& a, const PadicNum& b) {
  if (a.prime() != b.prime()) {
    throw PreconditionError("p-adic operands use different primes");
  }
}

// sum_j C(s, j) d^j with d of positive valuation and s in Z_p.
PadicNum BinomialSeries(const PadicNum& d, const PadicNum& s, long target) {
  long p = d.prime();
  if (d.is_zero()) return PadicNum::One(p, target);
  long vd = *d.valuation();
  BigInt s_int = s.is_zero() ? BigInt(0) : s.IntegerRepresentative();
  long s_abs = s.absolute_precision();
  PadicNum result = PadicNum::One(p, target);
  PadicNum dpow = PadicNum::One(p, target);
  for (long j = 1; j * vd < target; ++j) {
    dpow *= d;
    mpz_class c;
    mpz_bin_ui(c.get_mpz_t(), s_int.mpz().get_mpz_t(),
               static_cast<unsigned long>(j));
    long c_abs = s_abs >= PadicNum::kInfinitePrecision
                     ? target
                     : std::min(target, s_abs - FactorialValuation(j, p));
    PadicNum term = PadicNum::FromIntegerMod(BigInt(c), p, std::max(0L, c_abs));
    result += term * dpow;
  }
  return result.CapAbsolute(target);
}

}  // namespace

bool IsOddPrime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PadicConfig PadicConfig::Make(long p, long precision) {
  if (!IsOddPrime(p)) {
    throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
  }
  if (precision < 1) throw PreconditionError("p-adic precision must be >= 1");
  if (precision > 4096) throw ResourceError("p-adic precision above 4096");
  return PadicConfig{p, precision};
}

long RationalValuation(const Rational& x, long p) {
  if (x.is_zero()) throw PreconditionError("valuation of zero is infinite");
  mpz_class n = x.mpq().get_num(), d = x.mpq().get_den();
  return StripP(n, p) - StripP(d, p);
}

long FactorialValuation(long n, long p) {
  long v = 0;
  for (long q = n / p; q > 0; q /= p) v += q;
  return v;
}

PadicNum PadicNum::ExactZero(long p) {
  PadicNum z;
  z.p_ = p;
  return z;
}

PadicNum PadicNum::ZeroTo(long p, long absolute_precision) {
  PadicNum z;
  z.p_ = p;
  z.val_ = std::min(absolute_precision, kInfinitePrecision);
  return z;
}

PadicNum PadicNum::One(long p, long precision) {
  return FromParts(p, 0, 1, precision);
}

PadicNum PadicNum::FromParts(long p, long valuation, const mpz_class& unit,
                             long precision) {
  if (precision <= 0) return ZeroTo(p, valuation);
  PadicNum r;
  r.p_ = p;
  r.zero_ = false;
  r.val_ = valuation;
  r.prec_ = precision;
  r.unit_ = Mod(unit, PPow(p, precision));
  if (mpz_divisible_ui_p(r.unit_.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::logic_error("p-adic unit part divisible by p");
  }
  return r;
}

PadicNum PadicNum::FromRational(const Rational& x, const PadicConfig& cfg) {
  if (x.is_zero()) return ExactZero(cfg.p);
  mpz_class n = x.mpq().get_num(), d = x.mpq().get_den();
  long v = StripP(n, cfg.p) - StripP(d, cfg.p);
  mpz_class m = PPow(cfg.p, cfg.precision);
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  return FromParts(cfg.p, v, n * dinv, cfg.precision);
}

PadicNum PadicNum::FromInteger(const BigInt& x, const PadicConfig& cfg) {
  return FromRational(Rational(x), cfg);
}

PadicNum PadicNum::FromIntegerMod(const BigInt& x, long p, long absolute_precision) {
  mpz_class m = PPow(p, absolute_precision);
  mpz_class r = Mod(x.mpz(), m);
  if (r == 0) return ZeroTo(p, absolute_precision);
  long v = StripP(r, p);
  return FromParts(p, v, r, absolute_precision - v);
}

std::optional<long> PadicNum::valuation() const {
  if (zero_) return std::nullopt;
  return val_;
}

std::vector<long> PadicNum::digits() const {
  std::vector<long> out;
  if (zero_) return out;
  mpz_class u = unit_;
  for (long i = 0; i < prec_; ++i) {
    out.push_back(static_cast<long>(
        mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_))));
  }
  return out;
}

BigInt PadicNum::IntegerRepresentative() const {
  if (zero_) return BigInt(0);
  if (val_ < 0) throw PreconditionError("p-adic value is not in Z_p");
  return BigInt(mpz_class(unit_ * PPow(p_, val_)));
}

PadicNum PadicNum::CapAbsolute(long absolute_precision) const {
  if (absolute_precision >= this->absolute_precision()) return *this;
  if (zero_ || val_ >= absolute_precision) return ZeroTo(p_, absolute_precision);
  return FromParts(p_, val_, unit_, absolute_precision - val_);
}

PadicNum PadicNum::operator-() const {
  if (zero_) return *this;
  return FromParts(p_, val_, -unit_, prec_);
}

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
  RequireSamePrime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  long abs = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.zero_) return b.CapAbsolute(abs);
  if (b.zero_) return a.CapAbsolute(abs);
  long v0 = std::min(a.val_, b.val_);
  if (abs <= v0) return PadicNum::ZeroTo(a.p_, abs);
  mpz_class m = PPow(a.p_, abs - v0);
  mpz_class s = a.unit_ * PPow(a.p_, a.val_ - v0) + b.unit_ * PPow(a.p_, b.val_ - v0);
  s = Mod(s, m);
  if (s == 0) return PadicNum::ZeroTo(a.p_, abs);
  long k = StripP(s, a.p_);
  return PadicNum::FromParts(a.p_, v0 + k, s, abs - v0 - k);
}

PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
  RequireSamePrime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicNum::ExactZero(a.p_);
  if (a.zero_ || b.zero_) {
    // O(p^N) times a value of valuation v is O(p^(N+v)).
    return PadicNum::ZeroTo(a.p_, a.val_ + b.val_);
  }
  long prec = std::min(a.prec_, b.prec_);
  return PadicNum::FromParts(a.p_, a.val_ + b.val_, a.unit_ * b.unit_, prec);
}

PadicNum PadicNum::Inverse() const {
  if (zero_) throw DivisionByZeroError("p-adic inverse of zero");
  mpz_class m = PPow(p_, prec_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
  return FromParts(p_, -val_, inv, prec_);
}

PadicNum operator/(const PadicNum& a, const PadicNum& b) {
  RequireSamePrime(a, b);
  if (b.zero_) throw DivisionByZeroError("p-adic division by zero");
  if (a.is_exact_zero()) return a;
  if (a.zero_) return PadicNum::ZeroTo(a.p_, a.val_ - b.val_);
  return a * b.Inverse();
}

PadicNum PadicNum::Pow(long e) const {
  if (e < 0) return Inverse().Pow(-e);
  if (e == 0) {
    if (zero_) throw PreconditionError("p-adic 0^0");
    return One(p_, prec_);
  }
  PadicNum result;
  PadicNum base = *this;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool PadicNum::CongruentTo(const PadicNum& o, long n) const {
  PadicNum d = *this - o;
  return d.agreement() >= n;
}

nlohmann::ordered_json PadicNum::ToJson() const {
  nlohmann::ordered_json j;
  j["p"] = p_;
  if (zero_) {
    j["valuation"] = nullptr;
    j["digits"] = nlohmann::ordered_json::array();
    if (is_exact_zero()) {
      j["precision"] = nullptr;
    } else {
      j["precision"] = val_;
    }
    return j;
  }
  j["valuation"] = val_;
  j["digits"] = digits();
  j["precision"] = prec_;
  return j;
}

std::string PadicNum::ToString() const {
  if (is_exact_zero()) return "0";
  if (zero_) return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
  std::string s = unit_.get_str(10);
  if (val_ != 0) s += "*" + std::to_string(p_) + "^" + std::to_string(val_);
  return s + " + O(" + std::to_string(p_) + "^" + std::to_string(val_ + prec_) + ")";
}

PadicNum Teichmuller(const BigInt& a, const PadicConfig& cfg) {
  long p = cfg.p;
  mpz_class m = PPow(p, cfg.precision);
  mpz_class x = Mod(a.mpz(), m);
  if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw PreconditionError("Teichmuller character needs a unit, got " + a.ToString());
  }
  mpz_class pe = p;
  // Each step gains one correct digit, so K steps reach the fixed point.
  for (long i = 0; i <= cfg.precision; ++i) {
    mpz_class y;
    mpz_powm(y.get_mpz_t(), x.get_mpz_t(), pe.get_mpz_t(), m.get_mpz_t());
    if (y == x) break;
    x = y;
  }
  return PadicNum::FromParts(p, 0, x, cfg.precision);
}

namespace {

void RequireAdmissibleBase(const PadicNum& b, const char* what) {
  PadicNum one = PadicNum::One(b.prime(), std::max(1L, b.absolute_precision()));
  PadicNum d = b - one;
  if (d.agreement() < 1) {
    throw ConvergenceError(std::string(what) + ": requires v_p(base - 1) >= 1");
  }
}

long SeriesTarget(const PadicNum& b, const PadicConfig& cfg) {
  return std::min(cfg.precision, b.absolute_precision());
}

}  // namespace

PadicNum QPowX(const PadicNum& q, const PadicNum& x, const PadicConfig& cfg) {
  RequireAdmissibleBase(q, "q^x");
  if (x.valuation() && *x.valuation() < 0) {
    throw PreconditionError("q^x requires x in Z_p");
  }
  PadicNum d = q - PadicNum::One(q.prime(), q.absolute_precision());
  return BinomialSeries(d, x, SeriesTarget(q, cfg));
}

PadicNum BracketPowS(const PadicNum& b, const PadicNum& s, const PadicConfig& cfg) {
  RequireAdmissibleBase(b, "b^s");
  if (s.valuation() && *s.valuation() < 0) {
    throw PreconditionError("b^s requires s in Z_p");
  }
  PadicNum d = b - PadicNum::One(b.prime(), b.absolute_precision());
  return BinomialSeries(d, s, SeriesTarget(b, cfg));
}

PadicNum AngleBracket(const BigInt& x, const PadicNum& q, long alpha,
                      const PadicConfig& cfg) {
  if (alpha < 1) throw PreconditionError("alpha must be a positive integer");
  RequireAdmissibleBase(q, "<x:q>");
  PadicNum w = Teichmuller(x, cfg);
  PadicNum qa = q.Pow(alpha);
  BigInt ax = Abs(x);
  PadicNum bracket;
  if (ax.fits_int64() && ax.to_int64() <= 1000000) {
    // Geometric sum: no division, so no precision is lost.
    long n = ax.to_int64();
    bracket = PadicNum::ExactZero(cfg.p);
    PadicNum power = PadicNum::One(cfg.p, cfg.precision);
    for (long i = 0; i < n; ++i) {
      bracket += power;
      power *= qa;
    }
    if (x.sign() < 0) bracket = -(qa.Pow(x.to_int64())) * bracket;
  } else {
    if (!x.fits_int64()) throw ResourceError("bracket argument too large");
    PadicNum one = PadicNum::One(cfg.p, cfg.precision);
    bracket = (one - qa.Pow(x.to_int64())) / (one - qa);
  }
  return bracket / w;
}

}  // namespace qdc
