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

#include "qdc/cli/params.h"

#include <cstdlib>
#include <set>
#include <sstream>

#include "qdc/error.h"
#include "qdc/padic/padic.h"

namespace qdc::cli {

namespace {

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

long ToLong(const std::string& text, const std::string& what) {
  std::string t = Trim(text);
  try {
    size_t used = 0;
    long v = std::stol(t, &used);
    if (used == t.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("expected an integer for " + what + ", got '" + text + "'");
}

std::map<std::string, std::string> KeyValues(const std::string& text) {
  std::map<std::string, std::string> out;
  if (text.empty()) return out;
  for (const auto& item : Split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value: " + item);
    out[Trim(item.substr(0, eq))] = Trim(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

long DefaultPrecision() {
  const char* env = std::getenv("QDE_PRECISION");
  if (env == nullptr || *env == '\0') return 32;
  long k = ToLong(env, "QDE_PRECISION");
  if (k < 1) throw ParseError("QDE_PRECISION must be >= 1");
  return k;
}

Rational ParseQSpec(const std::string& text, long p) {
  std::string t = Trim(text);
  if (t.empty()) throw ParseError("empty q specification");
  Rational sum;
  size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    size_t end = t.find_first_of("+-", pos);
    std::string term = Trim(t.substr(pos, end == std::string::npos ? end : end - pos));
    pos = end == std::string::npos ? t.size() : end;
    if (term.empty()) throw ParseError("bad q specification '" + text + "'");
    Rational value;
    if (term == "p") {
      value = Rational(p);
    } else if (term.rfind("p^", 0) == 0) {
      long e = ToLong(term.substr(2), "power of p");
      if (e < 0 || e > 64) throw ParseError("power of p out of range");
      value = Pow(Rational(p), e);
    } else {
      value = Rational::FromString(term);
    }
    sum = sum + (sign > 0 ? value : -value);
  }
  return sum;
}

CoeffMode ParseMode(const std::string& text, long default_precision) {
  if (text == "symbolic") return Symbolic{};
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  auto kv = KeyValues(colon == std::string::npos ? "" : text.substr(colon + 1));
  if (head == "rational") {
    if (!kv.count("q")) throw ParseError("rational mode needs q=...");
    long p = kv.count("p") ? ToLong(kv["p"], "p") : 3;
    return RationalAt{ParseQSpec(kv["q"], p)};
  }
  if (head == "padic") {
    for (const auto& [key, value] : kv) {
      if (key != "p" && key != "K" && key != "q") {
        throw ParseError("unknown padic mode key '" + key + "'");
      }
    }
    long p = kv.count("p") ? ToLong(kv["p"], "p") : 3;
    long k = kv.count("K") ? ToLong(kv["K"], "K") : default_precision;
    PadicConfig cfg = PadicConfig::Make(p, k);
    Rational q = ParseQSpec(kv.count("q") ? kv["q"] : "1+p", p);
    return PadicMode{PadicNum::FromRational(q, cfg), cfg};
  }
  throw ParseError("unknown mode '" + text + "'");
}

std::vector<ParamAxis> ParseParamSpec(
    const std::string& text, const std::map<std::string, long>& lower_bounds) {
  std::vector<ParamAxis> axes;
  std::set<std::string> seen;
  if (Trim(text).empty()) return axes;
  for (std::string item : Split(text, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    ParamAxis axis;
    std::string rhs;
    size_t le = item.find("<=");
    size_t uni = item.find("≤");
    if (le != std::string::npos || uni != std::string::npos) {
      size_t at = le != std::string::npos ? le : uni;
      size_t width = le != std::string::npos ? 2 : std::string("≤").size();
      axis.name = Trim(item.substr(0, at));
      long hi = ToLong(item.substr(at + width), axis.name);
      auto lb = lower_bounds.find(axis.name);
      long lo = lb == lower_bounds.end() ? 0 : lb->second;
      if (hi < lo) throw ParseError("empty range for " + axis.name);
      for (long v = lo; v <= hi; ++v) axis.values.push_back(std::to_string(v));
    } else {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected name=value or name<=bound: " + item);
      }
      axis.name = Trim(item.substr(0, eq));
      rhs = Trim(item.substr(eq + 1));
      auto dots = rhs.find("..");
      if (dots != std::string::npos) {
        long lo = ToLong(rhs.substr(0, dots), axis.name);
        long hi = ToLong(rhs.substr(dots + 2), axis.name);
        if (hi < lo) throw ParseError("empty range for " + axis.name);
        for (long v = lo; v <= hi; ++v) axis.values.push_back(std::to_string(v));
      } else {
        for (const auto& v : Split(rhs, '|')) axis.values.push_back(Trim(v));
      }
    }
    if (axis.name.empty() || axis.values.empty()) {
      throw ParseError("bad parameter item '" + item + "'");
    }
    if (!seen.insert(axis.name).second) {
      throw ParseError("parameter '" + axis.name + "' given twice");
    }
    axes.push_back(axis);
  }
  return axes;
}

std::vector<ParamPoint> ExpandGrid(const std::vector<ParamAxis>& axes,
                                   const ParamPoint& defaults) {
  for (const auto& axis : axes) {
    if (!defaults.count(axis.name)) {
      throw ParseError("unknown parameter '" + axis.name + "'");
    }
  }
  std::vector<ParamPoint> points{defaults};
  for (const auto& axis : axes) {
    std::vector<ParamPoint> next;
    for (const auto& point : points) {
      for (const auto& v : axis.values) {
        ParamPoint p = point;
        p[axis.name] = v;
        next.push_back(p);
      }
    }
    points = std::move(next);
  }
  return points;
}

long ParamLong(const ParamPoint& point, const std::string& name) {
  auto it = point.find(name);
  if (it == point.end()) throw ParseError("missing parameter " + name);
  return ToLong(it->second, name);
}

Rational ParamRational(const ParamPoint& point, const std::string& name) {
  auto it = point.find(name);
  if (it == point.end()) throw ParseError("missing parameter " + name);
  return Rational::FromString(it->second);
}

}  // namespace qdc::cli
