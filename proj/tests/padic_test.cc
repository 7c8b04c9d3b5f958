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

#include <gmpxx.h>

#include <random>

#include "gtest/gtest.h"
#include "qdc/error.h"
#include "qdc/padic/padic.h"

namespace qdc {
namespace {

mpz_class PowP(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

// a/b mod p^k for p not dividing b, by modular inversion.
mpz_class Residue(const Rational& x, long p, long k) {
  mpz_class m = PowP(p, k);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), x.den().mpz().get_mpz_t(), m.get_mpz_t());
  mpz_class r = (x.num().mpz() * inv) % m;
  if (r < 0) r += m;
  return r;
}

Rational RandomUnitRational(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> dist(-5000, 5000);
  long den = 0;
  while (den == 0 || den % p == 0) den = dist(rng);
  return Rational(BigInt(dist(rng)), BigInt(den));
}

TEST(PadicConfig, Validation) {
  EXPECT_THROW(PadicConfig::Make(2), PreconditionError);
  EXPECT_THROW(PadicConfig::Make(9), PreconditionError);
  EXPECT_THROW(PadicConfig::Make(3, 0), PreconditionError);
  EXPECT_THROW(PadicConfig::Make(3, 5000), ResourceError);
  EXPECT_EQ(PadicConfig::Make(7, 16).precision, 16);
}

TEST(PadicNum, FieldOperationsMatchModularArithmetic) {
  for (long p : {3L, 5L, 7L}) {
    PadicConfig cfg = PadicConfig::Make(p, 20);
    std::mt19937_64 rng(static_cast<unsigned long>(p));
    for (int i = 0; i < 100; ++i) {
      Rational a = RandomUnitRational(rng, p), b = RandomUnitRational(rng, p);
      PadicNum pa = PadicNum::FromRational(a, cfg);
      PadicNum pb = PadicNum::FromRational(b, cfg);
      PadicNum sum = pa + pb;
      if (!sum.is_zero() && *sum.valuation() == 0) {
        EXPECT_EQ(sum.IntegerRepresentative().mpz() % PowP(p, 20), Residue(a + b, p, 20));
      }
      PadicNum prod = pa * pb;
      if (!a.is_zero() && !b.is_zero() && RationalValuation(a * b, p) == 0) {
        EXPECT_EQ(prod.IntegerRepresentative().mpz(), Residue(a * b, p, 20));
      }
      if (!b.is_zero() && RationalValuation(b, p) == 0 &&
          !a.is_zero() && RationalValuation(a, p) == 0) {
        EXPECT_EQ((pa / pb).IntegerRepresentative().mpz(), Residue(a / b, p, 20));
      }
    }
  }
}

TEST(PadicNum, ValuationAndPrecisionTracking) {
  PadicConfig cfg = PadicConfig::Make(3, 10);
  PadicNum x = PadicNum::FromRational(Rational::FromString("54/5"), cfg);
  EXPECT_EQ(*x.valuation(), 3);
  EXPECT_EQ(x.precision(), 10);
  EXPECT_EQ(x.absolute_precision(), 13);

  PadicNum three = PadicNum::FromInteger(BigInt(3), cfg);
  PadicNum one = PadicNum::One(3, 10);
  PadicNum d = (one + three) - one;  // exactly 3, known to absolute 10
  EXPECT_EQ(*d.valuation(), 1);
  EXPECT_EQ(d.absolute_precision(), 10);
  PadicNum q = one / d;  // 1/3 keeps the relative precision of d
  EXPECT_EQ(*q.valuation(), -1);
  EXPECT_EQ(q.precision(), 9);

  PadicNum z = x - x;
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.is_exact_zero());
  EXPECT_EQ(z.agreement(), 13);
  EXPECT_THROW(one / z, DivisionByZeroError);
  EXPECT_THROW(PadicNum::ExactZero(3).Pow(0), PreconditionError);
}

TEST(PadicNum, JsonShape) {
  PadicConfig cfg = PadicConfig::Make(5, 4);
  auto j = PadicNum::FromRational(Rational(7), cfg).ToJson();
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["valuation"], 0);
  EXPECT_EQ(j["digits"], nlohmann::ordered_json({2, 1, 0, 0}));
  EXPECT_EQ(j["precision"], 4);
  EXPECT_TRUE(PadicNum::ExactZero(5).ToJson()["valuation"].is_null());
}

TEST(Teichmuller, RootOfUnityCongruentToArgument) {
  for (long p : {3L, 5L, 7L, 11L}) {
    PadicConfig cfg = PadicConfig::Make(p, 32);
    for (long a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      PadicNum w = Teichmuller(BigInt(a), cfg);
      PadicNum one = PadicNum::One(p, 32);
      EXPECT_TRUE(w.Pow(p - 1).CongruentTo(one, 32)) << "p=" << p << " a=" << a;
      EXPECT_TRUE(w.CongruentTo(PadicNum::FromInteger(BigInt(a), cfg), 1));
    }
  }
  EXPECT_THROW(Teichmuller(BigInt(6), PadicConfig::Make(3)), PreconditionError);
}

TEST(Teichmuller, KnownValues) {
  PadicConfig cfg = PadicConfig::Make(5, 2);
  // The fourth roots of unity mod 25 are 1, 7, 18, 24.
  EXPECT_EQ(Teichmuller(BigInt(2), cfg).IntegerRepresentative(), BigInt(7));
  EXPECT_EQ(Teichmuller(BigInt(3), cfg).IntegerRepresentative(), BigInt(18));
  EXPECT_EQ(Teichmuller(BigInt(4), cfg).IntegerRepresentative(), BigInt(24));
}

TEST(QPowX, AgreesWithIntegerPowersAndRoots) {
  PadicConfig cfg = PadicConfig::Make(3, 32);
  PadicNum q = PadicNum::FromRational(Rational(4), cfg);
  for (long e = 0; e < 12; ++e) {
    PadicNum via_series = QPowX(q, PadicNum::FromInteger(BigInt(e), cfg), cfg);
    EXPECT_TRUE(via_series.CongruentTo(q.Pow(e), 32)) << e;
  }
  PadicNum half = PadicNum::FromRational(Rational::FromString("1/2"), cfg);
  PadicNum root = QPowX(q, half, cfg);
  EXPECT_TRUE((root * root).CongruentTo(q, 32));
  EXPECT_TRUE(root.CongruentTo(PadicNum::FromInteger(BigInt(-2), cfg), 32));
  EXPECT_THROW(QPowX(PadicNum::FromRational(Rational(2), cfg), half, cfg),
               ConvergenceError);
}

TEST(QPowX, HomomorphismOnRandomExponents) {
  for (long p : {3L, 5L, 7L}) {
    PadicConfig cfg = PadicConfig::Make(p, 24);
    std::mt19937_64 rng(static_cast<unsigned long>(100 + p));
    PadicNum q = PadicNum::FromRational(Rational(1 + p), cfg);
    for (int i = 0; i < 25; ++i) {
      PadicNum x = PadicNum::FromRational(RandomUnitRational(rng, p), cfg);
      PadicNum y = PadicNum::FromRational(RandomUnitRational(rng, p), cfg);
      PadicNum lhs = QPowX(q, x + y, cfg);
      PadicNum rhs = QPowX(q, x, cfg) * QPowX(q, y, cfg);
      EXPECT_TRUE(lhs.CongruentTo(rhs, 24));
    }
  }
}

TEST(AngleBracket, NormalisedBracket) {
  PadicConfig cfg = PadicConfig::Make(3, 32);
  PadicNum q = PadicNum::FromRational(Rational(4), cfg);
  // w(2) = -1, [2]_q = 1 + q = 5.
  PadicNum b = AngleBracket(BigInt(2), q, 1, cfg);
  EXPECT_TRUE(b.CongruentTo(PadicNum::FromInteger(BigInt(-5), cfg), 32));
  // <x:q> lies in 1 + pZ_p.
  for (long x : {1L, 2L, 4L, 5L, 7L, -1L, -4L}) {
    PadicNum v = AngleBracket(BigInt(x), q, 1, cfg);
    EXPECT_TRUE(v.CongruentTo(PadicNum::One(3, 32), 1)) << x;
  }
  EXPECT_THROW(AngleBracket(BigInt(3), q, 1, cfg), PreconditionError);
}

TEST(BracketPowS, IntegerExponentsMatchPowers) {
  PadicConfig cfg = PadicConfig::Make(5, 20);
  PadicNum b = PadicNum::FromRational(Rational::FromString("6/11"), cfg);
  for (long s = 0; s < 8; ++s) {
    EXPECT_TRUE(BracketPowS(b, PadicNum::FromInteger(BigInt(s), cfg), cfg)
                    .CongruentTo(b.Pow(s), 20));
  }
}

}  // namespace
}  // namespace qdc
