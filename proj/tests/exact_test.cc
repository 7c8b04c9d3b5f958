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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "qdc/error.h"
#include "qdc/exact/bigint.h"
#include "qdc/exact/rational.h"

namespace qdc {
namespace {

std::string Int128ToString(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

TEST(BigInt, ArithmeticMatchesInt128) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int64_t> dist(-(1LL << 40), 1LL << 40);
  for (int i = 0; i < 500; ++i) {
    int64_t a = dist(rng), b = dist(rng);
    __int128 wa = a, wb = b;
    EXPECT_EQ((BigInt(a) + BigInt(b)).ToString(), Int128ToString(wa + wb));
    EXPECT_EQ((BigInt(a) - BigInt(b)).ToString(), Int128ToString(wa - wb));
    EXPECT_EQ((BigInt(a) * BigInt(b)).ToString(), Int128ToString(wa * wb));
    if (b != 0) {
      __int128 q = wa / wb;
      if ((wa % wb != 0) && ((wa < 0) != (wb < 0))) --q;
      EXPECT_EQ(FloorDiv(BigInt(a), BigInt(b)).ToString(), Int128ToString(q));
      EXPECT_EQ(FloorMod(BigInt(a), BigInt(b)).ToString(),
                Int128ToString(wa - q * wb));
    }
  }
}

TEST(BigInt, ParsingAndLimits) {
  BigInt big = BigInt::FromString("-123456789012345678901234567890");
  EXPECT_EQ(big.sign(), -1);
  EXPECT_FALSE(big.fits_int64());
  EXPECT_THROW(big.to_int64(), ResourceError);
  EXPECT_THROW(BigInt::FromString("12a"), ParseError);
  EXPECT_THROW(BigInt::FromString(""), ParseError);
  EXPECT_EQ(BigInt::FromString("42").to_int64(), 42);
  EXPECT_EQ(Pow(BigInt(3), 40).ToString(), "12157665459056928801");
  EXPECT_EQ(Gcd(BigInt(-12), BigInt(18)), BigInt(6));
}

TEST(BigInt, BinomialMatchesPascalTriangle) {
  std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  for (unsigned long n = 1; n <= 60; ++n) {
    std::vector<BigInt> row(n + 1, BigInt(1));
    for (unsigned long k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(row);
  }
  for (unsigned long n = 0; n <= 60; ++n) {
    for (unsigned long k = 0; k <= n; ++k) EXPECT_EQ(Binomial(n, k), rows[n][k]);
  }
}

TEST(Rational, CanonicalForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Rational(BigInt(4), BigInt(2)).ToString(), "2");
  EXPECT_EQ(Rational::FromString("10/-4"), Rational(BigInt(-5), BigInt(2)));
  EXPECT_THROW(Rational::FromString("1/0"), DivisionByZeroError);
  EXPECT_THROW(Rational::FromString("x"), ParseError);
}

TEST(Rational, FieldOperations) {
  Rational a = Rational::FromString("1/3");
  Rational b = Rational::FromString("1/6");
  EXPECT_EQ(a + b, Rational::FromString("1/2"));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational::FromString("1/18"));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_THROW(a / Rational(0), DivisionByZeroError);
  EXPECT_EQ(Pow(Rational::FromString("-2/3"), 3), Rational::FromString("-8/27"));
  EXPECT_EQ(Pow(Rational::FromString("2/3"), -2), Rational::FromString("9/4"));
  EXPECT_THROW(Pow(Rational(0), -1), DivisionByZeroError);
}

TEST(Rational, FloorAndFraction) {
  FloorParts f = FracFloorParts(Rational::FromString("-7/3"));
  EXPECT_EQ(f.floor, BigInt(-3));
  EXPECT_EQ(f.frac, Rational::FromString("2/3"));
  FloorParts g = FracFloorParts(Rational(5));
  EXPECT_EQ(g.floor, BigInt(5));
  EXPECT_TRUE(g.frac.is_zero());
}

TEST(Rational, RandomFieldAxioms) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  auto draw = [&] {
    long d = 0;
    while (d == 0) d = dist(rng);
    return Rational(BigInt(dist(rng)), BigInt(d));
  };
  for (int i = 0; i < 200; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

}  // namespace
}  // namespace qdc
