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

#include "qdc/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdc/cli/params.h"
#include "qdc/dedekind/dedekind.h"
#include "qdc/dedekind/identities.h"
#include "qdc/error.h"
#include "qdc/oracle/oracle.h"
#include "qdc/qeuler/euler.h"
#include "qdc/qeuler/qeuler.h"

namespace qdc::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for bad flag values found after CLI11 parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EulerOptions {
  long n = 0;
  std::string format = "json";
};

struct QEulerOptions {
  long n = 0;
  long alpha = 1;
  std::string x = "0";
  std::string mode = "symbolic";
  std::string format = "json";
};

struct DcSumOptions {
  long m = 0, h = 0, k = 0;
  std::string format = "json";
};

struct VerifyOptions {
  std::string identity;
  std::string variant = "printed";
  std::string params;
  std::optional<std::string> mode;
  std::string ctilde = "interpolated";
  std::optional<std::string> report;
  std::optional<long> precision;
  long jobs = 1;
  std::optional<long> sample;
  unsigned long seed = 0;
  bool no_timing = false;
};

struct OracleOptions {
  long p = 3;
  std::string q = "1+p";
  long level = 4;
  long first_level = 1;
  std::string integrand = "one";
  std::string arithmetic = "padic";
  std::optional<long> precision;
};

struct IdentitySpec {
  ParamPoint defaults;
  std::map<std::string, long> lower_bounds;
};

const std::map<std::string, IdentitySpec>& Identities() {
  static const auto* specs = new std::map<std::string, IdentitySpec>{
      {"eq4", {{{"n", "1"}, {"alpha", "1"}, {"x", "0"}}, {{"alpha", 1}}}},
      {"eq5",
       {{{"n", "1"}, {"alpha", "1"}, {"x", "0"}, {"d", "3"}},
        {{"alpha", 1}, {"d", 1}}}},
      {"eq6",
       {{{"m", "1"}, {"h", "1"}, {"k", "3"}, {"alpha", "1"}, {"p", "3"}},
        {{"alpha", 1}, {"h", 1}, {"k", 1}}}},
      {"eq7",
       {{{"k", "1"}, {"alpha", "1"}, {"x", "0"}, {"modulus", "3"}},
        {{"alpha", 1}, {"modulus", 1}}}},
      {"eq8",
       {{{"m", "1"}, {"a", "1"}, {"N", "3"}, {"p", "3"}, {"alpha", "1"}},
        {{"alpha", 1}, {"N", 1}}}},
      {"recursion",
       {{{"m", "1"}, {"a", "1"}, {"N", "3"}, {"p", "3"}, {"alpha", "1"}},
        {{"alpha", 1}, {"a", 1}, {"N", 1}}}},
      {"theorem1",
       {{{"p", "3"}, {"m", "1"}, {"h", "1"}, {"k", "2"}, {"alpha", "1"}},
        {{"alpha", 1}, {"h", 1}, {"k", 1}}}},
  };
  return *specs;
}

json ParamJson(const std::string& text) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  return text;
}

IdentityReport RunPoint(const std::string& identity, const ParamPoint& pt,
                        Variant variant, const VerifyOptions& opts,
                        long precision) {
  auto mode_for = [&](const std::string& fallback) {
    return ParseMode(opts.mode.value_or(fallback), precision);
  };
  CTildeVariant ctilde = ParseCTildeVariant(opts.ctilde);
  try {
    if (identity == "eq4") {
      return CheckEq4(ParamLong(pt, "n"), ParamLong(pt, "alpha"),
                      ParamLong(pt, "x"), mode_for("symbolic"));
    }
    if (identity == "eq5") {
      return CheckEq5(ParamLong(pt, "n"), ParamLong(pt, "alpha"),
                      ParamRational(pt, "x"), ParamLong(pt, "d"), variant,
                      mode_for("symbolic"));
    }
    if (identity == "eq6") {
      return CheckEq6(ParamLong(pt, "m"), ParamLong(pt, "h"), ParamLong(pt, "k"),
                      ParamLong(pt, "alpha"), ParamLong(pt, "p"), variant,
                      mode_for("symbolic"));
    }
    if (identity == "eq7") {
      return CheckEq7(ParamLong(pt, "k"), ParamLong(pt, "alpha"),
                      ParamRational(pt, "x"), ParamLong(pt, "modulus"), variant,
                      mode_for("symbolic"));
    }
    if (identity == "eq8") {
      return CheckEq8(ParamLong(pt, "m"), ParamLong(pt, "a"), ParamLong(pt, "N"),
                      ParamLong(pt, "p"), ParamLong(pt, "alpha"), variant,
                      mode_for("symbolic"));
    }
    if (identity == "recursion") {
      return CheckRecursion(ParamLong(pt, "m"), ParamLong(pt, "a"),
                            ParamLong(pt, "N"), ParamLong(pt, "p"),
                            ParamLong(pt, "alpha"), variant, ctilde,
                            mode_for("symbolic"));
    }
    Theorem1Options t;
    t.form = variant;
    t.ctilde = ctilde;
    t.precision = precision;
    long p = ParamLong(pt, "p");
    t.mode = mode_for("rational:p=" + std::to_string(p) + ",q=1+p");
    return CheckTheorem1(ParamLong(pt, "m"), ParamLong(pt, "h"), ParamLong(pt, "k"),
                         ParamLong(pt, "alpha"), p, t);
  } catch (const PreconditionError& e) {
    IdentityReport r;
    r.identity = identity;
    r.variant = VariantName(variant);
    for (const auto& [name, value] : pt) r.params.emplace_back(name, ParamJson(value));
    r.status = ReportStatus::Fail(std::string("precondition: ") + e.what());
    return r;
  }
}

// Evaluates fn(i) for i < n on `jobs` threads; results keep index order.
std::vector<IdentityReport> RunParallel(
    size_t n, long jobs, const std::function<IdentityReport(size_t)>& fn) {
  std::vector<std::optional<IdentityReport>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  long threads = std::clamp<long>(jobs, 1, static_cast<long>(std::max<size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (long t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<IdentityReport> out;
  for (size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

int RunEuler(const EulerOptions& o, std::ostream& out) {
  auto table = EulerClassicalTable(o.n);
  if (o.format == "csv") {
    out << "n,polynomial\n";
    for (size_t i = 0; i < table.size(); ++i) {
      out << i << ",\"" << table[i].ToString("x") << "\"\n";
    }
    return kExitOk;
  }
  for (size_t i = 0; i < table.size(); ++i) {
    json row;
    row["n"] = i;
    row["polynomial"] = table[i].ToString("x");
    row["coefficients"] = table[i].ToCoefficientStrings();
    out << row.dump() << "\n";
  }
  return kExitOk;
}

int RunQEuler(const QEulerOptions& o, long precision, std::ostream& out) {
  CoeffMode mode = ParseMode(o.mode, precision);
  QEulerValue v = QEulerPoly(o.n, o.alpha, Rational::FromString(o.x), mode);
  if (o.format == "text") {
    out << v.ToString() << "\n";
    return kExitOk;
  }
  json j;
  j["n"] = o.n;
  j["alpha"] = o.alpha;
  j["x"] = o.x;
  j["mode"] = Describe(mode);
  j["value"] = v.ToJson();
  out << j.dump() << "\n";
  return kExitOk;
}

int RunDcSum(const DcSumOptions& o, std::ostream& out) {
  Rational s = DcSumClassical(o.m, o.h, o.k);
  if (o.format == "csv") {
    out << "m,h,k,value\n" << o.m << "," << o.h << "," << o.k << ","
        << s.ToString() << "\n";
    return kExitOk;
  }
  json j;
  j["m"] = o.m;
  j["h"] = o.h;
  j["k"] = o.k;
  j["value"] = s.ToString();
  out << j.dump() << "\n";
  return kExitOk;
}

int RunVerify(const VerifyOptions& o, long precision, std::ostream& out) {
  auto entry = Identities().find(o.identity);
  if (entry == Identities().end()) {
    throw UsageError("unknown identity '" + o.identity + "'");
  }
  ParseCTildeVariant(o.ctilde);
  if (o.mode) ParseMode(*o.mode, precision);
  std::vector<ParamPoint> points = ExpandGrid(
      ParseParamSpec(o.params, entry->second.lower_bounds), entry->second.defaults);
  if (o.sample && *o.sample < static_cast<long>(points.size())) {
    std::vector<size_t> idx(points.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(o.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<size_t>(std::max(0L, *o.sample)));
    std::sort(idx.begin(), idx.end());
    std::vector<ParamPoint> chosen;
    for (size_t i : idx) chosen.push_back(points[i]);
    points = std::move(chosen);
  }

  std::vector<Variant> variants;
  if (o.variant == "both") {
    variants = {Variant::kPrinted, Variant::kCorrected};
  } else {
    variants = {ParseVariant(o.variant)};
  }

  size_t nv = variants.size();
  auto reports = RunParallel(points.size() * nv, o.jobs, [&](size_t i) {
    return RunPoint(o.identity, points[i / nv], variants[i % nv], o, precision);
  });

  std::vector<std::string> lines;
  bool all_passed = true;
  std::vector<IdentityReport> by_variant[2];
  for (size_t i = 0; i < reports.size(); ++i) {
    lines.push_back(reports[i].ToJson(!o.no_timing).dump());
    all_passed = all_passed && reports[i].passed();
    by_variant[static_cast<int>(variants[i % nv])].push_back(reports[i]);
  }
  int code = all_passed ? kExitOk : kExitFailure;
  if (nv == 2) {
    ResolverVerdict verdict = Resolve(o.identity, by_variant[0], by_variant[1]);
    lines.push_back(verdict.ToJson().dump());
    code = verdict.winner ? kExitOk : kExitFailure;
  }

  std::ofstream file;
  if (o.report) {
    file.open(*o.report);
    if (!file) throw ResourceError("cannot open report file " + *o.report);
  }
  for (const auto& line : lines) {
    out << line << "\n";
    if (file) file << line << "\n";
  }
  return code;
}

int RunOracle(const OracleOptions& o, long precision, std::ostream& out) {
  IntegrandSpec f = IntegrandSpec::Parse(o.integrand);
  Rational q = ParseQSpec(o.q, o.p);
  CoeffMode mode;
  if (o.arithmetic == "padic") {
    PadicConfig cfg = PadicConfig::Make(o.p, precision);
    mode = PadicMode{PadicNum::FromRational(q, cfg), cfg};
  } else {
    mode = RationalAt{q};
  }
  auto profile = ConvergenceProfile(f, o.first_level, o.level, o.p, mode);
  json j;
  j["integrand"] = f.ToString();
  j["p"] = o.p;
  j["q"] = q.ToString();
  j["mode"] = Describe(mode);
  j["profile"] = ProfileToJson(profile);
  out << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"q-Euler polynomials and q-Dedekind-type sums"};
  app.name("qde");
  app.require_subcommand(1);
  std::optional<long> precision_flag;
  app.add_option("--precision", precision_flag,
                 "p-adic working precision K (default QDE_PRECISION or 32)")
      ->check(CLI::Range(1L, 4096L));

  EulerOptions eo;
  auto* euler = app.add_subcommand("euler", "Classical Euler polynomials E_0..E_n");
  euler->add_option("--n", eo.n, "largest index")->required()->check(CLI::Range(0L, 64L));
  euler->add_option("--format", eo.format)->check(CLI::IsMember({"json", "csv"}));

  QEulerOptions qo;
  auto* qeuler = app.add_subcommand("qeuler", "Extended q-Euler polynomial value");
  qeuler->add_option("--n", qo.n)->required()->check(CLI::Range(0L, 512L));
  qeuler->add_option("--alpha", qo.alpha)->check(CLI::Range(1L, 1000L));
  qeuler->add_option("--x", qo.x, "rational argument");
  qeuler->add_option("--mode", qo.mode, "symbolic | rational:q=n/d | padic:p=,K=,q=");
  qeuler->add_option("--format", qo.format)->check(CLI::IsMember({"json", "text"}));

  DcSumOptions dco;
  auto* dcsum = app.add_subcommand("dcsum", "Dedekind-type DC sum S_m(h,k)");
  dcsum->set_help_flag("--help", "Print this help message and exit");
  dcsum->add_option("--m", dco.m)->required()->check(CLI::Range(0L, 512L));
  dcsum->add_option("--h", dco.h)->required();
  dcsum->add_option("--k", dco.k)->required()->check(CLI::Range(1L, 100000L));
  dcsum->add_option("--format", dco.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter grid");
  verify->add_option("--identity", vo.identity)
      ->required()
      ->check(CLI::IsMember({"eq4", "eq5", "eq6", "eq7", "eq8", "recursion", "theorem1"}));
  verify->add_option("--variant", vo.variant)
      ->check(CLI::IsMember({"printed", "corrected", "both"}));
  verify->add_option("--params", vo.params, "e.g. n<=6,alpha=1..3,x=0|1/2");
  verify->add_option("--mode", vo.mode);
  verify->add_option("--ctilde", vo.ctilde)
      ->check(CLI::IsMember({"naive", "interpolated", "interpolated_corrected"}));
  verify->add_option("--report", vo.report, "also write the report lines here");
  verify->add_option("--jobs", vo.jobs)->check(CLI::Range(1L, 256L));
  verify->add_option("--sample", vo.sample, "check a random subset of the grid")
      ->check(CLI::Range(0L, 1000000L));
  verify->add_option("--seed", vo.seed, "seed for --sample");
  verify->add_flag("--no-timing", vo.no_timing, "omit elapsed_ms");

  OracleOptions oo;
  auto* oracle = app.add_subcommand("oracle", "Riemann-sum convergence profile");
  oracle->add_option("--p", oo.p);
  oracle->add_option("--q", oo.q, "q specification, e.g. 1+p");
  oracle->add_option("--level", oo.level, "last level")->check(CLI::Range(1L, 64L));
  oracle->add_option("--first-level", oo.first_level)->check(CLI::Range(1L, 64L));
  oracle->add_option("--integrand", oo.integrand,
                     "one | bracket:n=,alpha=[,x=][,base=] | qpow:e=[,base=]");
  oracle->add_option("--arithmetic", oo.arithmetic)
      ->check(CLI::IsMember({"padic", "rational"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    long precision = precision_flag ? *precision_flag : DefaultPrecision();
    if (*euler) return RunEuler(eo, out);
    if (*qeuler) return RunQEuler(qo, precision, out);
    if (*dcsum) return RunDcSum(dco, out);
    if (*verify) return RunVerify(vo, precision, out);
    if (*oracle) return RunOracle(oo, precision, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qdc::cli
