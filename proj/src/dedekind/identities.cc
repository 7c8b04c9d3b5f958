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

#include "qdc/dedekind/identities.h"

#include <chrono>
#include <numeric>
#include <string>
#include <utility>

#include "qdc/error.h"

namespace qdc {

namespace {

using Params = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

nlohmann::ordered_json RationalParam(const Rational& x) {
  if (x.is_integer() && x.num().fits_int64()) return x.num().to_int64();
  return x.ToString();
}

// Runs `body` (which returns the status) and fills in timing. Errors other
// than precondition violations become failures of the point.
template <class F>
IdentityReport Run(std::string identity, std::string variant, Params params,
                   const CoeffMode& mode, F&& body) {
  IdentityReport report;
  report.identity = std::move(identity);
  report.variant = std::move(variant);
  report.params = std::move(params);
  report.params.emplace_back("mode", Describe(mode));
  auto start = std::chrono::steady_clock::now();
  try {
    report.status = body();
  } catch (const PreconditionError&) {
    throw;
  } catch (const Error& e) {
    report.status = ReportStatus::Fail(std::string(ErrorKindName(e.kind())) +
                                       ": " + e.what());
  }
  auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

std::string SymbolicWitness(const SymbolicValue& lhs, const SymbolicValue& rhs) {
  long scale = std::lcm(lhs.scale, rhs.scale);
  RatFunc diff = lhs.Rescaled(scale).f - rhs.Rescaled(scale).f;
  for (long t = 2; t < 64; ++t) {
    try {
      Rational v = diff.Eval(Rational(t));
      return "lhs - rhs = " + v.ToString() + " at Q = " + std::to_string(t) +
             " (q = Q^" + std::to_string(scale) + ")";
    } catch (const PoleError&) {
    }
  }
  return "lhs - rhs = " + diff.ToString("Q");
}

// Exact comparison. With `judge` = (p, K), a rational difference is graded
// by its p-adic valuation instead of failing outright.
ReportStatus Compare(const QEulerValue& lhs, const QEulerValue& rhs,
                     std::optional<std::pair<long, long>> judge = {},
                     long slack = 0) {
  switch (lhs.kind()) {
    case ModeKind::kSymbolic:
      if (SameValue(lhs, rhs)) return ReportStatus::Exact();
      return ReportStatus::Fail(SymbolicWitness(lhs.symbolic(), rhs.symbolic()));
    case ModeKind::kRational: {
      Rational diff = lhs.rational() - rhs.rational();
      if (diff.is_zero()) return ReportStatus::Exact();
      if (!judge) return ReportStatus::Fail("lhs - rhs = " + diff.ToString());
      auto [p, k] = *judge;
      long v = RationalValuation(diff, p);
      if (v >= k - slack) return ReportStatus::Agreement(v, k);
      return ReportStatus::FailWithValuation(
          "v_" + std::to_string(p) + "(lhs - rhs) = " + std::to_string(v) +
              " < " + std::to_string(k - slack),
          v, k);
    }
    case ModeKind::kPadic: {
      PadicNum diff = lhs.padic() - rhs.padic();
      long k = std::max(lhs.padic().absolute_precision(),
                        rhs.padic().absolute_precision());
      if (judge) k = judge->second;
      if (diff.is_zero()) return ReportStatus::Agreement(diff.agreement(), k);
      return ReportStatus::FailWithValuation(
          "v_p(lhs - rhs) = " + std::to_string(diff.agreement()), diff.agreement(),
          k);
    }
  }
  return ReportStatus::Fail("unreachable");
}

std::optional<std::pair<long, long>> PadicJudge(const CoeffMode& mode) {
  if (auto* m = std::get_if<PadicMode>(&mode)) {
    return std::make_pair(m->cfg.p, m->cfg.precision);
  }
  return std::nullopt;
}

void RequirePrime(long p) { PadicConfig::Make(p); }

void RequireShape(long m, long alpha) {
  if (m < 0) throw PreconditionError("power must be >= 0");
  if (alpha < 1) throw PreconditionError("alpha must be a positive integer");
}

void RequireTheoremDegree(long m, long p) {
  if ((m + 1) % (p - 1) != 0) {
    throw PreconditionError("need m + 1 = 0 mod p - 1 (m = " +
                            std::to_string(m) + ", p = " + std::to_string(p) +
                            ")");
  }
}

}  // namespace

const char* VariantName(Variant v) {
  return v == Variant::kPrinted ? "printed" : "corrected";
}

Variant ParseVariant(const std::string& name) {
  if (name == "printed") return Variant::kPrinted;
  if (name == "corrected") return Variant::kCorrected;
  throw ParseError("unknown variant '" + name + "'");
}

IdentityReport CheckEq4(long n, long alpha, long x, const CoeffMode& mode) {
  RequireShape(n, alpha);
  if (x < 0) throw PreconditionError("x must be a nonnegative integer");
  return Run("eq4", "printed", {{"n", n}, {"alpha", alpha}, {"x", x}}, mode,
             [&] {
               return Compare(QEulerPoly(n, alpha, Rational(x), mode),
                              QEulerPolyAdditive(n, alpha, x, mode),
                              PadicJudge(mode));
             });
}

IdentityReport CheckEq5(long n, long alpha, const Rational& x, long d,
                        Variant variant, const CoeffMode& mode) {
  RequireShape(n, alpha);
  return Run("eq5", VariantName(variant),
             {{"n", n}, {"alpha", alpha}, {"x", RationalParam(x)}, {"d", d}},
             mode, [&] {
               return Compare(QEulerPoly(n, alpha, x, mode),
                              DistributionRhs(n, alpha, x, d, variant, mode),
                              PadicJudge(mode));
             });
}

IdentityReport CheckEq6(long m, long h, long k, long alpha, long p,
                        Variant variant, const CoeffMode& mode) {
  RequireShape(m, alpha);
  RequirePrime(p);
  if (h < 1 || k < 1 || std::gcd(h, k) != 1) {
    throw PreconditionError("need positive h, k with gcd(h, k) = 1");
  }
  if (k % p != 0) throw PreconditionError("eq6 needs p | k");
  for (long M = 1; M < k; ++M) {
    if ((h * M) % p == 0) {
      throw PreconditionError("eq6 needs p not dividing hM, fails at M = " +
                              std::to_string(M));
    }
  }
  RequireTheoremDegree(m, p);
  return Run("eq6", VariantName(variant),
             {{"m", m}, {"h", h}, {"k", k}, {"alpha", alpha}, {"p", p}}, mode,
             [&] {
               auto lhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::Eq6Lhs(c, m, h, k, alpha);
               });
               auto rhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::Eq6Rhs(c, m, h, k, alpha, variant);
               });
               return Compare(lhs, rhs, PadicJudge(mode));
             });
}

IdentityReport CheckEq7(long power, long alpha, const Rational& x,
                        long modulus, Variant variant, const CoeffMode& mode) {
  RequireShape(power, alpha);
  if (modulus < 1 || modulus % 2 == 0) {
    throw PreconditionError("modulus must be odd and positive");
  }
  return Run("eq7", VariantName(variant),
             {{"k", power},
              {"alpha", alpha},
              {"x", RationalParam(x)},
              {"modulus", modulus}},
             mode, [&] {
               long scale = ScaleFor({x});
               auto lhs = QEulerPoly(power, alpha, x, mode);
               auto rhs = WithContext(mode, scale, [&](const auto& c) {
                 return engine::Eq7Rhs(c, power, alpha, x, modulus, variant);
               });
               return Compare(lhs, rhs, PadicJudge(mode));
             });
}

IdentityReport CheckEq8(long m, long a, long n, long p, long alpha,
                        Variant variant, const CoeffMode& mode) {
  RequireShape(m, alpha);
  RequirePrime(p);
  if (a < 0 || n < 1) throw PreconditionError("need a >= 0 and N >= 1");
  return Run("eq8", VariantName(variant),
             {{"m", m}, {"a", a}, {"N", n}, {"p", p}, {"alpha", alpha}}, mode,
             [&] {
               auto lhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::CTildeNaive(c, m, a, n, alpha);
               });
               auto rhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::Eq8Rhs(c, m, a, n, p, alpha, variant);
               });
               return Compare(lhs, rhs, PadicJudge(mode));
             });
}

IdentityReport CheckRecursion(long m, long a, long n, long p, long alpha,
                              Variant variant, CTildeVariant ctilde,
                              const CoeffMode& mode) {
  RequireShape(m, alpha);
  RequirePrime(p);
  if (a < 1 || n < 1) throw PreconditionError("need a >= 1 and N >= 1");
  if (a % p == 0) throw PreconditionError("gcd(a, p) must be 1");
  long classes = 0;
  for (long i = 0; i < p; ++i) classes += (a + i * n) % p != 0;
  return Run("recursion", VariantName(variant),
             {{"m", m},
              {"a", a},
              {"N", n},
              {"p", p},
              {"alpha", alpha},
              {"ctilde", CTildeVariantName(ctilde)},
              {"index_set_size", classes}},
             mode, [&] {
               auto lhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::CTildeInteger(c, m, a, n, alpha, p, ctilde);
               });
               auto rhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::RecursionRhs(c, m, a, n, alpha, p, variant,
                                             ctilde);
               });
               return Compare(lhs, rhs, PadicJudge(mode));
             });
}

IdentityReport CheckTheorem1(long m, long h, long k, long alpha, long p,
                             const Theorem1Options& options) {
  RequireShape(m, alpha);
  RequirePrime(p);
  if (h < 1 || k < 1 || std::gcd(h, k) != 1) {
    throw PreconditionError("need positive h, k with gcd(h, k) = 1");
  }
  if (k % p == 0) throw PreconditionError("theorem1 needs p not dividing k");
  RequireTheoremDegree(m, p);
  if (options.precision < 1) throw PreconditionError("precision must be >= 1");
  CoeffMode mode = options.mode ? *options.mode : CoeffMode(RationalAt{Rational(1 + p)});
  if (auto* r = std::get_if<RationalAt>(&mode)) {
    Rational d = Rational(1) - r->q0;
    if (d.is_zero() || RationalValuation(d, p) < 1) {
      throw ConvergenceError("theorem1 needs v_p(1 - q) >= 1");
    }
  }
  if (auto* pm = std::get_if<PadicMode>(&mode); pm && pm->cfg.p != p) {
    throw PreconditionError("p differs from the p-adic mode prime");
  }
  return Run("theorem1", VariantName(options.form),
             {{"p", p},
              {"m", m},
              {"h", h},
              {"k", k},
              {"alpha", alpha},
              {"ctilde", CTildeVariantName(options.ctilde)},
              {"K", options.precision}},
             mode, [&] {
               auto lhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::DefinitionSum(c, m, h, k, alpha, p,
                                              options.ctilde);
               });
               auto rhs = WithContext(mode, 1, [&](const auto& c) {
                 return engine::Theorem1Rhs(c, m, h, k, alpha, p, options.form);
               });
               std::optional<std::pair<long, long>> judge;
               if (KindOf(mode) != ModeKind::kSymbolic) {
                 judge = std::make_pair(p, options.precision);
               }
               return Compare(lhs, rhs, judge, kTheoremSlack);
             });
}

nlohmann::ordered_json ResolverVerdict::ToJson() const {
  nlohmann::ordered_json j;
  j["resolver"] = identity;
  j["points"] = points;
  j["printed_exact"] = printed_exact;
  j["corrected_exact"] = corrected_exact;
  j["verdict"] = winner ? nlohmann::ordered_json(VariantName(*winner))
                        : nlohmann::ordered_json("undecided");
  return j;
}

ResolverVerdict Resolve(const std::string& identity,
                        const std::vector<IdentityReport>& printed,
                        const std::vector<IdentityReport>& corrected) {
  ResolverVerdict v;
  v.identity = identity;
  v.points = static_cast<long>(std::max(printed.size(), corrected.size()));
  for (const auto& r : printed) v.printed_exact += r.exact();
  for (const auto& r : corrected) v.corrected_exact += r.exact();
  bool printed_all = !printed.empty() && v.printed_exact == v.points;
  bool corrected_all = !corrected.empty() && v.corrected_exact == v.points;
  if (printed_all != corrected_all) {
    v.winner = printed_all ? Variant::kPrinted : Variant::kCorrected;
  }
  return v;
}

}  // namespace qdc
