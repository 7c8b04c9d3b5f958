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

#ifndef QDC_DEDEKIND_IDENTITIES_H_
#define QDC_DEDEKIND_IDENTITIES_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdc/dedekind/dedekind.h"
#include "qdc/dedekind/report.h"
#include "qdc/qeuler/qeuler.h"

namespace qdc {

const char* VariantName(Variant v);
// Accepts "printed" and "corrected".
Variant ParseVariant(const std::string& name);

// Closed form against the addition formula for E_{n,q}(x), integer x >= 0.
IdentityReport CheckEq4(long n, long alpha, long x, const CoeffMode& mode);

// d-fold distribution relation, d odd.
IdentityReport CheckEq5(long n, long alpha, const Rational& x, long d,
                        Variant variant, const CoeffMode& mode);

// [k]^{m+1} J_m(h,k:q^k) against the M-sum of C(m, ., k). Needs p | k,
// p not dividing hM, m + 1 = 0 mod p - 1.
IdentityReport CheckEq6(long m, long h, long k, long alpha, long p,
                        Variant variant, const CoeffMode& mode);

// Splitting of the bracket-power integral over an odd modulus.
IdentityReport CheckEq7(long power, long alpha, const Rational& x,
                        long modulus, Variant variant, const CoeffMode& mode);

// p-fold splitting of [N]^m E_{m,q^N}(a/N).
IdentityReport CheckEq8(long m, long a, long n, long p, long alpha,
                        Variant variant, const CoeffMode& mode);

// C(m,a,N) against the weighted sum over the classes a + iN not divisible
// by p. `variant` selects the weight, `ctilde` the C form on both sides.
IdentityReport CheckRecursion(long m, long a, long n, long p, long alpha,
                              Variant variant, CTildeVariant ctilde,
                              const CoeffMode& mode);

struct Theorem1Options {
  // kPrinted uses [pk]/[k] in the second term, kCorrected ([pk]/[k])^m.
  Variant form = Variant::kPrinted;
  CTildeVariant ctilde = CTildeVariant::kInterpolated;
  // Defaults to exact arithmetic at q = 1 + p.
  std::optional<CoeffMode> mode;
  // Working precision K against which a non-exact difference is judged.
  long precision = 32;
};

// Precision a p-adic agreement may fall short of K by. Both sides are
// finite sums evaluated exactly at rational q, so nothing is lost.
inline constexpr long kTheoremSlack = 0;

IdentityReport CheckTheorem1(long m, long h, long k, long alpha, long p,
                             const Theorem1Options& options);

// Verdict over a sweep run under both variants: the unique variant that is
// exact at every point, if any.
struct ResolverVerdict {
  std::string identity;
  long points = 0;
  long printed_exact = 0;
  long corrected_exact = 0;
  std::optional<Variant> winner;

  nlohmann::ordered_json ToJson() const;
};

ResolverVerdict Resolve(const std::string& identity,
                        const std::vector<IdentityReport>& printed,
                        const std::vector<IdentityReport>& corrected);

}  // namespace qdc

#endif  // QDC_DEDEKIND_IDENTITIES_H_
