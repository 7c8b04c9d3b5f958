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

#ifndef QDC_ORACLE_ORACLE_H_
#define QDC_ORACLE_ORACLE_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdc/exact/rational.h"
#include "qdc/qeuler/mode.h"

namespace qdc {

// Integrand of a fermionic q-integral against mu_{q^l}.
struct IntegrandSpec {
  enum class Kind { kOne, kBracketPower, kQPower };

  Kind kind = Kind::kOne;
  long n = 0;       // bracket power: ([x + xi]_{q^{l alpha}})^n
  long alpha = 1;
  Rational x;
  long e = 0;       // q power: q^{e xi}
  long base = 1;    // l

  static IntegrandSpec One(long base = 1);
  static IntegrandSpec BracketPower(long n, long alpha, const Rational& x,
                                    long base = 1);
  static IntegrandSpec QPower(long e, long base = 1);

  // "one", "bracket:n=1,alpha=1[,x=1/3][,base=3]" or "qpow:e=2[,base=1]".
  static IntegrandSpec Parse(const std::string& text);
  std::string ToString() const;
};

// Largest p^level the Riemann sums accept.
inline constexpr long kMaxRiemannTerms = 1000000;

// sum_{a < p^level} f(a) mu_{q^l}(a + p^level Z_p), straight from the
// definition of the measure. In p-adic mode p must match the mode.
QEulerValue RiemannLevel(const IntegrandSpec& f, long level, long p,
                         const CoeffMode& mode);

// Value of the integral from the q-Euler closed forms.
QEulerValue ClosedForm(const IntegrandSpec& f, const CoeffMode& mode);

struct ProfilePoint {
  long level = 0;
  // v_p(Riemann sum - closed form); nullopt when the difference vanishes
  // (exactly, or to the full working precision in p-adic mode).
  std::optional<long> valuation;
};

// One point per level in [first, last]. Rational or p-adic mode.
std::vector<ProfilePoint> ConvergenceProfile(const IntegrandSpec& f,
                                             long first, long last, long p,
                                             const CoeffMode& mode);

// [{"level": n, "valuation": v | null}, ...]
nlohmann::ordered_json ProfileToJson(const std::vector<ProfilePoint>& profile);

}  // namespace qdc

#endif  // QDC_ORACLE_ORACLE_H_
