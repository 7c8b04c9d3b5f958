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

#include "qdc/qeuler/euler.h"

#include "qdc/error.h"

namespace qdc {

std::vector<Poly> EulerClassicalTable(long n) {
  if (n < 0) throw PreconditionError("Euler polynomial index must be >= 0");
  std::vector<Poly> table;
  table.reserve(static_cast<size_t>(n) + 1);
  for (long m = 0; m <= n; ++m) {
    Poly acc;
    for (long k = 0; k < m; ++k) {
      acc = acc + Rational(Binomial(static_cast<unsigned long>(m),
                                    static_cast<unsigned long>(k))) *
                      table[static_cast<size_t>(k)];
    }
    table.push_back(Poly::Monomial(1, m) - Rational(1, 2) * acc);
  }
  return table;
}

Poly EulerClassical(long n) { return EulerClassicalTable(n).back(); }

Rational PeriodicEuler(long m, const Rational& x) {
  FloorParts parts = FracFloorParts(x);
  Rational value = EulerClassical(m).Eval(parts.frac);
  return parts.floor.is_odd() ? -value : value;
}

}  // namespace qdc
