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

#ifndef QDC_QEULER_EULER_H_
#define QDC_QEULER_EULER_H_

#include <vector>

#include "qdc/exact/rational.h"
#include "qdc/ratfunc/poly.h"

namespace qdc {

// Classical Euler polynomial E_n(x) (generating function 2e^{xt}/(e^t+1)),
// from the recurrence sum_{k<=n} C(n,k) E_k(x) + E_n(x) = 2 x^n.
Poly EulerClassical(long n);

// E_0 .. E_n in one pass.
std::vector<Poly> EulerClassicalTable(long n);

// Anti-periodic extension of E_m from [0, 1): (-1)^[x] E_m({x}).
Rational PeriodicEuler(long m, const Rational& x);

}  // namespace qdc

#endif  // QDC_QEULER_EULER_H_
