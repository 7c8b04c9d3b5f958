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

#include "qdc/qeuler/mode.h"

#include <numeric>

#include "qdc/error.h"

namespace qdc {

ModeKind KindOf(const CoeffMode& mode) {
  return static_cast<ModeKind>(mode.index());
}

std::string Describe(const CoeffMode& mode) {
  if (auto* r = std::get_if<RationalAt>(&mode)) {
    return "rational:q=" + r->q0.ToString();
  }
  if (auto* m = std::get_if<PadicMode>(&mode)) {
    return "padic:p=" + std::to_string(m->cfg.p) +
           ",K=" + std::to_string(m->cfg.precision) +
           ",q=" + m->q.IntegerRepresentative().ToString();
  }
  return "symbolic";
}

SymbolicValue SymbolicValue::Rescaled(long new_scale) const {
  if (new_scale % scale != 0) {
    throw PreconditionError("symbolic rescale must be a multiple of the scale");
  }
  return {f.SubstPower(new_scale / scale), new_scale};
}

Rational QEulerValue::LimitAtOne() const {
  if (kind() == ModeKind::kRational) return rational();
  if (kind() != ModeKind::kSymbolic) {
    throw PreconditionError("q -> 1 limit needs a symbolic value");
  }
  return symbolic().f.Eval(Rational(1));
}

std::string QEulerValue::ToString() const {
  switch (kind()) {
    case ModeKind::kRational:
      return rational().ToString();
    case ModeKind::kSymbolic:
      return symbolic().f.ToString(symbolic().scale == 1 ? "q" : "Q");
    case ModeKind::kPadic:
      return padic().ToString();
  }
  return {};
}

nlohmann::ordered_json QEulerValue::ToJson() const {
  nlohmann::ordered_json j;
  switch (kind()) {
    case ModeKind::kRational:
      j["mode"] = "rational";
      j["value"] = rational().ToString();
      break;
    case ModeKind::kSymbolic: {
      const auto& s = symbolic();
      j["mode"] = "symbolic";
      j["variable"] = s.scale == 1 ? "q" : "Q";
      j["q_equals_Q_pow"] = s.scale;
      j["text"] = ToString();
      j["num"] = s.f.num().ToCoefficientStrings();
      j["den"] = s.f.den().ToCoefficientStrings();
      break;
    }
    case ModeKind::kPadic:
      j["mode"] = "padic";
      j["value"] = padic().ToJson();
      break;
  }
  return j;
}

bool SameValue(const QEulerValue& a, const QEulerValue& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ModeKind::kRational:
      return a.rational() == b.rational();
    case ModeKind::kSymbolic: {
      long l = std::lcm(a.symbolic().scale, b.symbolic().scale);
      return a.symbolic().Rescaled(l).f == b.symbolic().Rescaled(l).f;
    }
    case ModeKind::kPadic: {
      PadicNum d = a.padic() - b.padic();
      return d.is_zero();
    }
  }
  return false;
}

}  // namespace qdc
