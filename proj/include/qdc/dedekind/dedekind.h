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

#ifndef QDC_DEDEKIND_DEDEKIND_H_
#define QDC_DEDEKIND_DEDEKIND_H_

#include "qdc/dedekind/formulas.h"
#include "qdc/exact/rational.h"
#include "qdc/padic/padic.h"
#include "qdc/qeuler/mode.h"

namespace qdc {

using engine::CTildeVariant;

const char* CTildeVariantName(CTildeVariant v);
// Accepts "naive", "interpolated" and "interpolated_corrected".
CTildeVariant ParseCTildeVariant(const std::string& name);

// S_m(h,k) = sum_{M=1}^{k-1} (-1)^{M-1} (M/k) Ebar_m(hM/k).
Rational DcSumClassical(long m, long h, long k);

// J_{m,q}(h,k : q^l). Outside symbolic mode k must divide l.
QEulerValue JSum(long m, long h, long k, long alpha, long l,
                 const CoeffMode& mode);

// C(m, a, N : q^N) for integer m in the requested variant. When p | N the
// interpolated variants coincide with the naive one.
QEulerValue CTildeInteger(long m, long a, long n, long alpha, long p,
                          CTildeVariant variant, const CoeffMode& mode);

struct SeriesValue {
  PadicNum value;
  long terms = 0;      // number of series terms summed
  long precision = 0;  // guaranteed absolute precision of value
};

// Truncated interpolating series C(s, a, N : q^N) in Z_p. With p | N the
// j-th term has valuation >= j v_p([N]_{q^alpha}) and the sum stops once
// that bound reaches the working precision or after j_trunc + 1 terms.
// With p not dividing N the series only terminates, so s must then be a
// nonnegative integer <= j_trunc (ConvergenceError otherwise).
SeriesValue CTildeSeries(const PadicNum& s, long a, long n, long alpha,
                         const PadicNum& q, long j_trunc,
                         const PadicConfig& cfg);

// Definition-1 sum sum_M (-1)^{M-1} [M]_{q^alpha} C(m, (hM)_k, k : q^k),
// evaluated in `mode`.
QEulerValue JPadic(long m, long h, long k, long alpha, long p,
                   CTildeVariant variant, const CoeffMode& mode);

// Same sum at rational q, computed exactly and then read in Z_p.
PadicNum JPadic(long m, long h, long k, long alpha, const Rational& q,
                const PadicConfig& cfg, CTildeVariant variant);

// The same M-sum with each C replaced by its truncated series at s.
SeriesValue JPadicSeries(const PadicNum& s, long h, long k, long alpha,
                         const PadicNum& q, long j_trunc,
                         const PadicConfig& cfg);

}  // namespace qdc

#endif  // QDC_DEDEKIND_DEDEKIND_H_
