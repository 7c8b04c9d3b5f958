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

#ifndef QDC_QEULER_MODE_H_
#define QDC_QEULER_MODE_H_

#include <string>
#include <variant>

#include "json.hpp"
#include "qdc/exact/rational.h"
#include "qdc/padic/padic.h"
#include "qdc/ratfunc/ratfunc.h"

namespace qdc {

// q specialised to a rational number q0.
struct RationalAt {
  Rational q0;
};
// q kept as an indeterminate.
struct Symbolic {};
// q as a p-adic number with v_p(1 - q) >= 1.
struct PadicMode {
  PadicNum q;
  PadicConfig cfg;
};

using CoeffMode = std::variant<RationalAt, Symbolic, PadicMode>;

enum class ModeKind { kRational, kSymbolic, kPadic };

ModeKind KindOf(const CoeffMode& mode);
std::string Describe(const CoeffMode& mode);

// A symbolic value written in the variable Q where q = Q^scale. Fractional
// powers of q become integral powers of Q this way.
struct SymbolicValue {
  RatFunc f;
  long scale = 1;

  // Re-expresses the value over Q' with q = Q'^new_scale (a multiple of
  // scale).
  SymbolicValue Rescaled(long new_scale) const;
};

// Result of the q-Euler and Dedekind-sum operations: a scalar in one of the
// three coefficient modes.
class QEulerValue {
 public:
  explicit QEulerValue(Rational v) : v_(std::move(v)) {}
  explicit QEulerValue(SymbolicValue v) : v_(std::move(v)) {}
  explicit QEulerValue(PadicNum v) : v_(std::move(v)) {}

  ModeKind kind() const { return static_cast<ModeKind>(v_.index()); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const SymbolicValue& symbolic() const { return std::get<SymbolicValue>(v_); }
  const PadicNum& padic() const { return std::get<PadicNum>(v_); }

  // q -> 1 of a symbolic value: evaluation of the reduced form at 1.
  Rational LimitAtOne() const;

  std::string ToString() const;
  nlohmann::ordered_json ToJson() const;

 private:
  std::variant<Rational, SymbolicValue, PadicNum> v_;
};

// Structural equality after bringing symbolic values to a common scale.
bool SameValue(const QEulerValue& a, const QEulerValue& b);

}  // namespace qdc

#endif  // QDC_QEULER_MODE_H_
