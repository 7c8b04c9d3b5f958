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

#ifndef QDC_QEULER_QEULER_H_
#define QDC_QEULER_QEULER_H_

#include "qdc/exact/rational.h"
#include "qdc/qeuler/engine.h"
#include "qdc/qeuler/euler.h"
#include "qdc/qeuler/mode.h"

namespace qdc {

using engine::Variant;

// Runs f with the context matching `mode`; symbolic values are built over
// Q with q = Q^symbolic_scale.
template <class F>
QEulerValue WithContext(const CoeffMode& mode, long symbolic_scale, F&& f) {
  if (auto* r = std::get_if<RationalAt>(&mode)) {
    return QEulerValue(f(engine::RationalContext(r->q0)));
  }
  if (auto* m = std::get_if<PadicMode>(&mode)) {
    return QEulerValue(f(engine::PadicContext(m->q, m->cfg)));
  }
  engine::SymbolicContext ctx(symbolic_scale);
  return QEulerValue(SymbolicValue{f(ctx), symbolic_scale});
}

// mu_q(a + p^level Z_p) = (-q)^a (1+q) / (1+q^{p^level}), 0 <= a < p^level.
// In p-adic mode p must match the mode's prime.
QEulerValue Measure(long a, long level, long p, const CoeffMode& mode);

// Extended q-Euler number with weight alpha (closed form at x = 0).
QEulerValue QEulerNumber(long n, long alpha, const CoeffMode& mode);

// Extended q-Euler polynomial at rational x. Symbolic mode substitutes
// q = Q^den(x); rational mode needs integral x; p-adic mode needs x in Z_p.
QEulerValue QEulerPoly(long n, long alpha, const Rational& x,
                       const CoeffMode& mode);

// Same polynomial via the addition formula (x a nonnegative integer).
QEulerValue QEulerPolyAdditive(long n, long alpha, long x, const CoeffMode& mode);

// Right side of the d-fold distribution relation (d odd).
QEulerValue DistributionRhs(long n, long alpha, const Rational& x, long d,
                            Variant variant, const CoeffMode& mode);

// Integral of q^{e xi} against mu_{q^base}.
QEulerValue QPowerIntegral(long e, long base, const CoeffMode& mode);

// Smallest symbolic scale D making q^{e} an integral power of Q for the
// given exponents.
long ScaleFor(std::initializer_list<Rational> exponents);

}  // namespace qdc

#endif  // QDC_QEULER_QEULER_H_
