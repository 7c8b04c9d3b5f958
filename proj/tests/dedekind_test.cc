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

#include <vector>

#include "gtest/gtest.h"
#include "qdc/dedekind/dedekind.h"
#include "qdc/dedekind/identities.h"
#include "qdc/error.h"
#include "qdc/qeuler/euler.h"

namespace qdc {
namespace {

const CoeffMode kSymbolic = Symbolic{};

Rational Frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

// E_m(x) from E_m(x) = x^m - (1/2) sum_{j<m} C(m,j) E_j(x), evaluated
// pointwise so it shares no code with the polynomial table.
Rational EulerAt(long m, const Rational& x) {
  std::vector<Rational> e;
  for (long n = 0; n <= m; ++n) {
    Rational acc = Pow(x, n);
    for (long j = 0; j < n; ++j) {
      acc -= Frac(1, 2) * Rational(Binomial(n, j)) * e[j];
    }
    e.push_back(acc);
  }
  return e[m];
}

// S_m(h,k) with the anti-periodic extension written out by hand.
Rational DcSumOracle(long m, long h, long k, bool antiperiodic = true) {
  Rational sum;
  for (long M = 1; M < k; ++M) {
    long whole = (h * M) / k;
    Rational frac = Frac((h * M) % k, k);
    Rational ebar = EulerAt(m, frac);
    if (antiperiodic && whole % 2 == 1) ebar = -ebar;
    Rational term = Frac(M, k) * ebar;
    sum += (M % 2 == 1) ? term : -term;
  }
  return sum;
}

TEST(DcSumClassical, HandCheckedValues) {
  EXPECT_EQ(DcSumClassical(1, 1, 2), Rational(0));
  EXPECT_EQ(DcSumClassical(1, 1, 3), Frac(-1, 6));
  EXPECT_EQ(DcSumClassical(1, 2, 3), Frac(-1, 18));
  EXPECT_EQ(DcSumClassical(4, 3, 1), Rational(0));
  EXPECT_THROW(DcSumClassical(1, 2, 4), PreconditionError);
}

TEST(DcSumClassical, MatchesIndependentSum) {
  for (long m = 0; m <= 5; ++m) {
    for (long k = 1; k <= 9; ++k) {
      for (long h = 1; h <= 2 * k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        EXPECT_EQ(DcSumClassical(m, h, k), DcSumOracle(m, h, k))
            << m << " " << h << " " << k;
      }
    }
  }
}

TEST(JSum, ClassicalLimitForUnitNumerator) {
  for (auto [m, h, k] : std::vector<std::array<long, 3>>{
           {1, 1, 2}, {1, 1, 3}, {2, 1, 3}, {3, 1, 5}, {1, 1, 4}, {2, 1, 5}}) {
    EXPECT_EQ(JSum(m, h, k, 1, k, kSymbolic).LimitAtOne(), DcSumClassical(m, h, k));
  }
}

TEST(JSum, LimitUsesFractionalPartsWithoutSign) {
  // For h > 1 the q-sum takes E_m({hM/k}) with no (-1)^[hM/k] factor, so
  // its limit differs from S_m(h,k) whenever some [hM/k] is odd.
  for (auto [m, h, k] : std::vector<std::array<long, 3>>{
           {1, 2, 3}, {2, 3, 5}, {3, 2, 5}, {1, 4, 7}}) {
    Rational limit = JSum(m, h, k, 1, k, kSymbolic).LimitAtOne();
    EXPECT_EQ(limit, DcSumOracle(m, h, k, /*antiperiodic=*/false));
  }
  EXPECT_EQ(JSum(1, 2, 3, 1, 3, kSymbolic).LimitAtOne(), Frac(1, 6));
  EXPECT_NE(Frac(1, 6), DcSumClassical(1, 2, 3));
}

TEST(JSum, PinnedSymbolicValue) {
  QEulerValue v = JSum(1, 1, 3, 1, 3, kSymbolic);
  EXPECT_EQ(v.ToString(),
            "(-2*q-q^2-q^4+q^6)/(1+2*q+3*q^2+2*q^3+q^4+q^6+2*q^7+3*q^8+2*q^9+q^10)");
  EXPECT_EQ(v.LimitAtOne(), Frac(-1, 6));
}

TEST(JSum, EdgeCasesAndPreconditions) {
  EXPECT_EQ(JSum(3, 1, 1, 1, 1, kSymbolic).symbolic().f, RatFunc(0));
  EXPECT_THROW(JSum(1, 2, 4, 1, 4, kSymbolic), PreconditionError);
  EXPECT_THROW(JSum(1, 1, 3, 1, 2, RationalAt{Rational(4)}), PreconditionError);
  EXPECT_NO_THROW(JSum(1, 1, 3, 1, 2, kSymbolic));
  EXPECT_EQ(JSum(1, 1, 3, 1, 3, RationalAt{Rational(2)}).rational(),
            JSum(1, 1, 3, 1, 3, kSymbolic).symbolic().f.Eval(Rational(2)));
}

TEST(CTildeInteger, Fixtures) {
  EXPECT_EQ(CTildeInteger(0, 1, 2, 1, 3, CTildeVariant::kNaive, kSymbolic).ToString(), "1");
  EXPECT_EQ(CTildeInteger(0, 1, 2, 1, 3, CTildeVariant::kInterpolated, kSymbolic).ToString(),
            "0");
  EXPECT_EQ(CTildeInteger(0, 1, 2, 1, 3, CTildeVariant::kInterpolatedCorrected, kSymbolic)
                .ToString(),
            "(1+q^4)/(1-q^2+q^4)");
  QEulerValue naive = CTildeInteger(1, 1, 3, 1, 3, CTildeVariant::kNaive, kSymbolic);
  EXPECT_EQ(naive.ToString(), "(1-q^4-q^5)/(1+q^6)");
  EXPECT_EQ(naive.LimitAtOne(), Rational(3) * EulerAt(1, Frac(1, 3)));
}

TEST(CTildeInteger, VariantsCoincideWhenPDividesN) {
  for (auto v : {CTildeVariant::kInterpolated, CTildeVariant::kInterpolatedCorrected}) {
    EXPECT_TRUE(SameValue(CTildeInteger(3, 2, 6, 1, 3, v, kSymbolic),
                          CTildeInteger(3, 2, 6, 1, 3, CTildeVariant::kNaive, kSymbolic)));
  }
}

TEST(CTildeSeries, ZeroExponentGivesInverseTeichmuller) {
  PadicConfig cfg = PadicConfig::Make(5, 20);
  PadicNum q = PadicNum::FromRational(Rational(6), cfg);
  for (long a : {1L, 2L, 3L, 4L, 7L}) {
    SeriesValue v = CTildeSeries(PadicNum::ExactZero(5), a, 5, 1, q, 40, cfg);
    EXPECT_TRUE(v.value.CongruentTo(Teichmuller(BigInt(a), cfg).Inverse(), 20)) << a;
  }
}

TEST(CTildeSeries, IntegerExponentMatchesClosedForm) {
  PadicConfig cfg = PadicConfig::Make(3, 32);
  PadicNum q = PadicNum::FromRational(Rational(4), cfg);
  CoeffMode mode = RationalAt{Rational(4)};
  for (auto [m, a, n] : std::vector<std::array<long, 3>>{
           {1, 1, 3}, {1, 2, 3}, {3, 1, 3}, {3, 4, 6}, {5, 2, 9}, {1, 1, 2}, {3, 1, 4}}) {
    SeriesValue series = CTildeSeries(PadicNum::FromInteger(BigInt(m), cfg), a, n, 1,
                                      q, 64, cfg);
    Rational exact = CTildeInteger(m, a, n, 1, 3, CTildeVariant::kNaive, mode).rational();
    PadicNum diff = series.value - PadicNum::FromRational(exact, cfg);
    EXPECT_TRUE(diff.is_zero()) << m << " " << a << " " << n << ": " << diff.ToString();
    EXPECT_GE(series.precision, 28);
  }
}

TEST(CTildeSeries, ContinuousInS) {
  PadicConfig cfg = PadicConfig::Make(3, 32);
  PadicNum q = PadicNum::FromRational(Rational(4), cfg);
  PadicNum s = PadicNum::FromRational(Frac(1, 2), cfg);
  PadicNum near = s + PadicNum::FromInteger(Pow(BigInt(3), 6), cfg);
  SeriesValue a = CTildeSeries(s, 2, 3, 1, q, 64, cfg);
  SeriesValue b = CTildeSeries(near, 2, 3, 1, q, 64, cfg);
  EXPECT_TRUE(a.value.CongruentTo(b.value, 6));
  EXPECT_FALSE(a.value.CongruentTo(b.value, 20));
}

TEST(CTildeSeries, Preconditions) {
  PadicConfig cfg = PadicConfig::Make(3, 16);
  PadicNum q = PadicNum::FromRational(Rational(4), cfg);
  PadicNum half = PadicNum::FromRational(Frac(1, 2), cfg);
  EXPECT_THROW(CTildeSeries(half, 3, 3, 1, q, 32, cfg), PreconditionError);
  EXPECT_THROW(CTildeSeries(half, 1, 2, 1, q, 32, cfg), ConvergenceError);
  EXPECT_THROW(CTildeSeries(half, 1, 3, 1, PadicNum::FromRational(Rational(2), cfg), 32, cfg),
               ConvergenceError);
  SeriesValue short_run = CTildeSeries(half, 1, 3, 1, q, 3, cfg);
  EXPECT_EQ(short_run.terms, 4);
  EXPECT_LT(short_run.precision, 16);
}

TEST(JPadic, PinnedValueAndEdges) {
  PadicConfig cfg = PadicConfig::Make(3, 32);
  QEulerValue exact = JPadic(1, 1, 2, 1, 3, CTildeVariant::kInterpolated,
                             RationalAt{Rational(4)});
  EXPECT_EQ(exact.rational(), Rational::FromString("1392300/16777217"));
  PadicNum v = JPadic(1, 1, 2, 1, Rational(4), cfg, CTildeVariant::kInterpolated);
  EXPECT_EQ(*v.valuation(), 2);
  EXPECT_EQ(v.digits(), (std::vector<long>{1, 1, 0, 2, 0, 2, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0,
                                           1, 0, 0, 1, 2, 2, 1, 1, 1, 1, 0, 1, 0, 0, 2, 0}));
  EXPECT_TRUE(JPadic(1, 1, 1, 1, Rational(4), cfg, CTildeVariant::kInterpolated).is_zero());
  EXPECT_THROW(JPadic(1, 1, 3, 1, Rational(4), cfg, CTildeVariant::kInterpolated),
               PreconditionError);
  EXPECT_THROW(JPadic(2, 1, 2, 1, Rational(4), cfg, CTildeVariant::kInterpolated),
               PreconditionError);
  EXPECT_THROW(JPadic(1, 1, 2, 1, Rational(2), cfg, CTildeVariant::kInterpolated),
               ConvergenceError);
}

TEST(JPadic, SeriesAgreesWithClosedFormAtIntegers) {
  for (auto [p, m, h, k] : std::vector<std::array<long, 4>>{
           {3, 1, 1, 2}, {5, 3, 1, 2}, {5, 3, 2, 3}, {5, 3, 1, 4}, {7, 5, 3, 2}}) {
    PadicConfig cfg = PadicConfig::Make(p, 24);
    PadicNum q = PadicNum::FromRational(Rational(1 + p), cfg);
    SeriesValue series =
        JPadicSeries(PadicNum::FromInteger(BigInt(m), cfg), h, k, 1, q, 64, cfg);
    PadicNum closed = JPadic(m, h, k, 1, Rational(1 + p), cfg, CTildeVariant::kNaive);
    PadicNum diff = series.value - closed;
    EXPECT_TRUE(diff.is_zero()) << p << " " << m << " " << h << " " << k;
  }
}

TEST(JPadic, ZeroExponentSeries) {
  PadicConfig cfg = PadicConfig::Make(5, 16);
  PadicNum q = PadicNum::FromRational(Rational(6), cfg);
  SeriesValue v = JPadicSeries(PadicNum::ExactZero(5), 1, 3, 1, q, 8, cfg);
  // [1] w^{-1}(1) - [2] w^{-1}(2) with [2] = 1 + q.
  PadicNum expected = PadicNum::One(5, 16) -
                      PadicNum::FromInteger(BigInt(7), cfg) *
                          Teichmuller(BigInt(2), cfg).Inverse();
  EXPECT_TRUE(v.value.CongruentTo(expected, 16));
}

TEST(Recursion, CorrectedWeightIsExact) {
  for (long m : {1L, 3L}) {
    for (auto [a, n] : std::vector<std::array<long, 2>>{{1, 3}, {2, 3}, {1, 2}, {1, 4}, {5, 6}}) {
      IdentityReport r = CheckRecursion(m, a, n, 3, 1, Variant::kCorrected,
                                        CTildeVariant::kInterpolatedCorrected, kSymbolic);
      EXPECT_TRUE(r.exact()) << r.ToJson().dump();
    }
  }
  IdentityReport printed = CheckRecursion(1, 1, 3, 3, 1, Variant::kPrinted,
                                          CTildeVariant::kInterpolated, kSymbolic);
  EXPECT_FALSE(printed.passed());
}

TEST(Recursion, PrintedInterpolationFailsWhenPDoesNotDivideN) {
  IdentityReport r = CheckRecursion(1, 1, 2, 3, 1, Variant::kCorrected,
                                    CTildeVariant::kInterpolated, kSymbolic);
  EXPECT_FALSE(r.passed());
}

TEST(Recursion, IndexSetSize) {
  IdentityReport r = CheckRecursion(1, 2, 3, 3, 1, Variant::kCorrected,
                                    CTildeVariant::kInterpolated, kSymbolic);
  auto j = r.ToJson();
  EXPECT_EQ(j["params"]["index_set_size"], 3);
  IdentityReport s = CheckRecursion(1, 1, 2, 3, 1, Variant::kCorrected,
                                    CTildeVariant::kInterpolated, kSymbolic);
  EXPECT_EQ(s.ToJson()["params"]["index_set_size"], 2);
}

TEST(Eq6, FractionalPartReadingIsExact) {
  for (long h : {1L, 2L}) {
    EXPECT_TRUE(CheckEq6(1, h, 3, 1, 3, Variant::kCorrected, kSymbolic).exact());
  }
  EXPECT_TRUE(CheckEq6(1, 1, 3, 1, 3, Variant::kPrinted, kSymbolic).exact());
  EXPECT_FALSE(CheckEq6(1, 2, 3, 1, 3, Variant::kPrinted, kSymbolic).passed());
  EXPECT_THROW(CheckEq6(1, 1, 4, 1, 3, Variant::kCorrected, kSymbolic), PreconditionError);
  EXPECT_THROW(CheckEq6(1, 3, 5, 1, 5, Variant::kCorrected, kSymbolic), PreconditionError);
}

TEST(Eq7, Splitting) {
  Rational x = Frac(1, 3);
  for (auto v : {Variant::kPrinted, Variant::kCorrected}) {
    EXPECT_TRUE(CheckEq7(2, 1, x, 1, v, kSymbolic).exact());
  }
  EXPECT_TRUE(CheckEq7(1, 1, Rational(0), 3, Variant::kCorrected, kSymbolic).exact());
  EXPECT_FALSE(CheckEq7(1, 1, Rational(0), 3, Variant::kPrinted, kSymbolic).passed());
  EXPECT_THROW(CheckEq7(1, 1, x, 2, Variant::kCorrected, kSymbolic), PreconditionError);
}

TEST(Eq8, WeightedSplitting) {
  EXPECT_TRUE(CheckEq8(1, 1, 3, 3, 1, Variant::kCorrected, kSymbolic).exact());
  EXPECT_FALSE(CheckEq8(1, 1, 3, 3, 1, Variant::kPrinted, kSymbolic).passed());
  EXPECT_TRUE(CheckEq8(3, 2, 2, 5, 2, Variant::kCorrected, kSymbolic).exact());
}

TEST(Theorem1, HoldsWithBracketRatioToTheMth) {
  for (auto [p, m, h, k] : std::vector<std::array<long, 4>>{
           {3, 1, 1, 2}, {3, 3, 1, 4}, {5, 3, 2, 3}, {5, 7, 1, 4}, {7, 5, 2, 3}}) {
    Theorem1Options o;
    o.form = Variant::kCorrected;
    EXPECT_TRUE(CheckTheorem1(m, h, k, 1, p, o).exact());
    o.mode = kSymbolic;
    EXPECT_TRUE(CheckTheorem1(m, h, k, 1, p, o).exact());
  }
}

TEST(Theorem1, PrintedFormHoldsOnlyForFirstPower) {
  Theorem1Options o;
  EXPECT_TRUE(CheckTheorem1(1, 1, 2, 1, 3, o).exact());
  EXPECT_TRUE(CheckTheorem1(1, 1, 4, 1, 3, o).exact());
  for (long k_prec : {16L, 32L}) {
    o.precision = k_prec;
    IdentityReport r = CheckTheorem1(3, 1, 4, 1, 3, o);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.status.has_valuation);
    EXPECT_EQ(r.status.valuation, 1);
  }
}

TEST(Theorem1, PadicModeAgrees) {
  PadicConfig cfg = PadicConfig::Make(3, 24);
  Theorem1Options o;
  o.form = Variant::kCorrected;
  o.precision = 24;
  o.mode = PadicMode{PadicNum::FromRational(Rational(4), cfg), cfg};
  IdentityReport r = CheckTheorem1(3, 1, 2, 1, 3, o);
  EXPECT_TRUE(r.passed()) << r.ToJson().dump();
  EXPECT_EQ(r.status.kind, ReportStatus::Kind::kPadicAgreement);
}

TEST(Theorem1, Preconditions) {
  Theorem1Options o;
  EXPECT_THROW(CheckTheorem1(2, 1, 2, 1, 3, o), PreconditionError);
  EXPECT_THROW(CheckTheorem1(1, 1, 3, 1, 3, o), PreconditionError);
  EXPECT_THROW(CheckTheorem1(1, 2, 4, 1, 3, o), PreconditionError);
  o.mode = RationalAt{Rational(2)};
  EXPECT_THROW(CheckTheorem1(1, 1, 2, 1, 3, o), ConvergenceError);
}

TEST(Resolver, UniqueExactVariant) {
  auto report = [](bool exact) {
    IdentityReport r;
    r.status = exact ? ReportStatus::Exact() : ReportStatus::Fail("x");
    return r;
  };
  auto v = Resolve("eq5", {report(true), report(false)}, {report(true), report(true)});
  ASSERT_TRUE(v.winner.has_value());
  EXPECT_EQ(*v.winner, Variant::kCorrected);
  EXPECT_EQ(v.ToJson()["verdict"], "corrected");
  auto tie = Resolve("eq5", {report(true)}, {report(true)});
  EXPECT_FALSE(tie.winner.has_value());
  EXPECT_EQ(tie.ToJson()["verdict"], "undecided");
}

TEST(IdentityReport, JsonSchema) {
  IdentityReport r = CheckEq4(1, 1, 1, kSymbolic);
  auto j = r.ToJson();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "variant", "params", "status",
                                            "elapsed_ms"}));
  EXPECT_EQ(j["status"], "exact");
  EXPECT_FALSE(r.ToJson(false).contains("elapsed_ms"));
  IdentityReport a;
  a.status = ReportStatus::Agreement(20, 32);
  EXPECT_EQ(a.ToJson()["status"]["padic_agreement"], 20);
  EXPECT_EQ(a.ToJson()["status"]["precision"], 32);
}

}  // namespace
}  // namespace qdc
