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

#include "qdc/oracle/oracle.h"

#include <sstream>

#include "qdc/error.h"
#include "qdc/qeuler/qeuler.h"

namespace qdc {

namespace {

long ParseLong(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad integer for " + what + ": '" + text + "'");
}

long LevelModulus(long p, long level) {
  if (level < 1) throw PreconditionError("level must be >= 1");
  long modulus = 1;
  for (long i = 0; i < level; ++i) {
    if (modulus > kMaxRiemannTerms / p) {
      throw ResourceError("p^level exceeds the guardrail of " +
                          std::to_string(kMaxRiemannTerms));
    }
    modulus *= p;
  }
  return modulus;
}

long SymbolicScale(const IntegrandSpec& f) {
  return f.kind == IntegrandSpec::Kind::kBracketPower ? ScaleFor({f.x}) : 1;
}

template <class Ctx>
typename Ctx::Value Riemann(const Ctx& c, const IntegrandSpec& f,
                            long modulus) {
  using V = typename Ctx::Value;
  const long l = f.base;
  const long step = l * f.alpha;
  V minus_ql = -c.QPow(Rational(l));
  V weight = c.Const(1);
  V sum = c.Const(0);

  V shift = c.Const(0);
  V shift_pow = c.Const(1);
  V geo = c.Const(0);    // [a]_{q^{l alpha}}
  V geo_pow = c.Const(1);  // q^{l alpha a}
  V qe = c.QPow(Rational(f.e));
  V qe_pow = c.Const(1);
  if (f.kind == IntegrandSpec::Kind::kBracketPower) {
    shift = engine::Bracket(c, f.x, step);
    shift_pow = c.QPow(f.x * Rational(step));
  }
  V q_step = c.QPow(Rational(step));

  for (long a = 0; a < modulus; ++a) {
    V value = c.Const(1);
    switch (f.kind) {
      case IntegrandSpec::Kind::kOne:
        break;
      case IntegrandSpec::Kind::kBracketPower:
        value = engine::Power(c, shift + shift_pow * geo, f.n);
        geo = geo + geo_pow;
        geo_pow = geo_pow * q_step;
        break;
      case IntegrandSpec::Kind::kQPower:
        value = qe_pow;
        qe_pow = qe_pow * qe;
        break;
    }
    sum = sum + value * weight;
    weight = weight * minus_ql;
  }
  return c.Div((c.Const(1) + c.QPow(Rational(l))) * sum,
               c.Const(1) + c.QPow(Rational(l * modulus)));
}

void Validate(const IntegrandSpec& f) {
  if (f.base < 1) throw PreconditionError("base exponent must be >= 1");
  if (f.kind == IntegrandSpec::Kind::kBracketPower) {
    if (f.n < 0) throw PreconditionError("bracket power must be >= 0");
    if (f.alpha < 1) throw PreconditionError("alpha must be >= 1");
  }
  if (f.kind == IntegrandSpec::Kind::kQPower && f.e < 0) {
    throw PreconditionError("q-power exponent must be >= 0");
  }
}

}  // namespace

IntegrandSpec IntegrandSpec::One(long base) {
  IntegrandSpec f;
  f.base = base;
  return f;
}

IntegrandSpec IntegrandSpec::BracketPower(long n, long alpha, const Rational& x,
                                          long base) {
  IntegrandSpec f;
  f.kind = Kind::kBracketPower;
  f.n = n;
  f.alpha = alpha;
  f.x = x;
  f.base = base;
  return f;
}

IntegrandSpec IntegrandSpec::QPower(long e, long base) {
  IntegrandSpec f;
  f.kind = Kind::kQPower;
  f.e = e;
  f.base = base;
  return f;
}

IntegrandSpec IntegrandSpec::Parse(const std::string& text) {
  std::string head = text.substr(0, text.find(':'));
  std::string rest = text.find(':') == std::string::npos
                         ? ""
                         : text.substr(text.find(':') + 1);
  IntegrandSpec f;
  if (head == "one") {
    f.kind = Kind::kOne;
  } else if (head == "bracket") {
    f.kind = Kind::kBracketPower;
    f.n = 1;
  } else if (head == "qpow") {
    f.kind = Kind::kQPower;
  } else {
    throw ParseError("unknown integrand '" + head + "'");
  }
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value: " + item);
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (name == "base") {
      f.base = ParseLong(value, name);
    } else if (f.kind == Kind::kBracketPower && name == "n") {
      f.n = ParseLong(value, name);
    } else if (f.kind == Kind::kBracketPower && name == "alpha") {
      f.alpha = ParseLong(value, name);
    } else if (f.kind == Kind::kBracketPower && name == "x") {
      f.x = Rational::FromString(value);
    } else if (f.kind == Kind::kQPower && name == "e") {
      f.e = ParseLong(value, name);
    } else {
      throw ParseError("unknown integrand parameter '" + name + "'");
    }
  }
  Validate(f);
  return f;
}

std::string IntegrandSpec::ToString() const {
  std::string base_part = ",base=" + std::to_string(base);
  switch (kind) {
    case Kind::kOne:
      return "one:base=" + std::to_string(base);
    case Kind::kBracketPower:
      return "bracket:n=" + std::to_string(n) + ",alpha=" + std::to_string(alpha) +
             ",x=" + x.ToString() + base_part;
    case Kind::kQPower:
      return "qpow:e=" + std::to_string(e) + base_part;
  }
  return "unknown";
}

QEulerValue RiemannLevel(const IntegrandSpec& f, long level, long p,
                         const CoeffMode& mode) {
  Validate(f);
  PadicConfig::Make(p);
  if (auto* m = std::get_if<PadicMode>(&mode); m && m->cfg.p != p) {
    throw PreconditionError("p differs from the p-adic mode prime");
  }
  long modulus = LevelModulus(p, level);
  if (KindOf(mode) == ModeKind::kSymbolic &&
      static_cast<double>(modulus) * f.base * SymbolicScale(f) > kMaxPolyDegree) {
    throw ResourceError("symbolic Riemann sum exceeds the degree limit");
  }
  return WithContext(mode, SymbolicScale(f), [&](const auto& c) {
    return Riemann(c, f, modulus);
  });
}

QEulerValue ClosedForm(const IntegrandSpec& f, const CoeffMode& mode) {
  Validate(f);
  return WithContext(mode, SymbolicScale(f), [&](const auto& c) {
    using V = std::decay_t<decltype(c.Const(0))>;
    switch (f.kind) {
      case IntegrandSpec::Kind::kOne:
        return c.Const(1);
      case IntegrandSpec::Kind::kBracketPower:
        return engine::QEuler(c, f.n, f.alpha, f.base, f.x);
      case IntegrandSpec::Kind::kQPower:
        return engine::QPowerIntegral(c, Rational(f.e), f.base);
    }
    return V(c.Const(0));
  });
}

std::vector<ProfilePoint> ConvergenceProfile(const IntegrandSpec& f,
                                             long first, long last, long p,
                                             const CoeffMode& mode) {
  if (KindOf(mode) == ModeKind::kSymbolic) {
    throw PreconditionError("convergence profiles need rational or p-adic q");
  }
  if (first < 1 || last < first) throw PreconditionError("bad level range");
  LevelModulus(p, last);
  QEulerValue closed = ClosedForm(f, mode);
  std::vector<ProfilePoint> out;
  for (long level = first; level <= last; ++level) {
    QEulerValue sum = RiemannLevel(f, level, p, mode);
    ProfilePoint point{level, std::nullopt};
    if (sum.kind() == ModeKind::kRational) {
      Rational diff = sum.rational() - closed.rational();
      if (!diff.is_zero()) point.valuation = RationalValuation(diff, p);
    } else {
      PadicNum diff = sum.padic() - closed.padic();
      if (!diff.is_zero()) point.valuation = diff.agreement();
    }
    out.push_back(point);
  }
  return out;
}

nlohmann::ordered_json ProfileToJson(const std::vector<ProfilePoint>& profile) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& pt : profile) {
    nlohmann::ordered_json row;
    row["level"] = pt.level;
    row["valuation"] = pt.valuation ? nlohmann::ordered_json(*pt.valuation)
                                    : nlohmann::ordered_json(nullptr);
    out.push_back(row);
  }
  return out;
}

}  // namespace qdc
