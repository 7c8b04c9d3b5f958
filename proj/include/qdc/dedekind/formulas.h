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

#ifndef QDC_DEDEKIND_FORMULAS_H_
#define QDC_DEDEKIND_FORMULAS_H_

// Mode-generic forms of the q-Dedekind sums and of both sides of the
// identities relating them. All integrals are replaced by closed forms of
// extended q-Euler polynomials, so every function here is a finite sum.

#include "qdc/exact/bigint.h"
#include "qdc/qeuler/engine.h"

namespace qdc::engine {

enum class CTildeVariant {
  kNaive,                   // [N]^m E_{m,q^N}(a/N)
  kInterpolated,            // naive minus [pN]^m E_{m,q^{pN}}(b/N)
  kInterpolatedCorrected,   // the removed term carries its measure weight
};

inline long Mod(long a, long n) { return ((a % n) + n) % n; }

// (p^{-1} a)_N: the x in [0, N) with p x = a (mod N). Needs gcd(p, N) = 1.
inline long InverseTimes(long p, long a, long n) {
  if (n == 1) return 0;
  long inv = 1;
  while (Mod(p * inv, n) != 1) ++inv;
  return Mod(inv * Mod(a, n), n);
}

// (-1)^i, times q^{step i} when weighted.
template <class Ctx>
typename Ctx::Value AlternatingWeight(const Ctx& c, long i, long step,
                                      bool weighted) {
  auto sign = c.Const(i % 2 == 0 ? 1 : -1);
  return weighted ? sign * c.QPow(Rational(step * i)) : sign;
}

// J_{m,q}(h,k : q^l) = sum_M (-1)^{M-1} [M]/[k] E_{m,q^l}({hM/k}),
// brackets in q^alpha.
template <class Ctx>
typename Ctx::Value DcSumQ(const Ctx& c, long m, long h, long k, long alpha,
                           long l) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  if (k == 1) return sum;
  V bk = Bracket(c, Rational(k), alpha);
  for (long M = 1; M < k; ++M) {
    Rational frac(BigInt(Mod(h * M, k)), BigInt(k));
    V term = c.Div(Bracket(c, Rational(M), alpha), bk) *
             QEuler(c, m, alpha, l, frac);
    sum = (M % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

template <class Ctx>
typename Ctx::Value CTildeNaive(const Ctx& c, long m, long a, long n,
                                long alpha) {
  return Power(c, Bracket(c, Rational(n), alpha), m) *
         QEuler(c, m, alpha, n, Rational(BigInt(a), BigInt(n)));
}

template <class Ctx>
typename Ctx::Value CTildeInteger(const Ctx& c, long m, long a, long n,
                                  long alpha, long p, CTildeVariant variant) {
  using V = typename Ctx::Value;
  V naive = CTildeNaive(c, m, a, n, alpha);
  if (variant == CTildeVariant::kNaive || n % p == 0) return naive;
  V bracket = Power(c, Bracket(c, Rational(p * n), alpha), m);
  if (variant == CTildeVariant::kInterpolated) {
    long b = InverseTimes(p, a, n);
    return naive - bracket * QEuler(c, m, alpha, p * n,
                                    Rational(BigInt(b), BigInt(n)));
  }
  long i0 = 0;
  while (Mod(a + i0 * n, p) != 0) ++i0;
  Rational shifted(BigInt(a + i0 * n), BigInt(p * n));
  V weight = c.Div(c.Const(1) + c.QPow(Rational(n)),
                   c.Const(1) + c.QPow(Rational(p * n))) *
             AlternatingWeight(c, i0, n, true);
  return naive - weight * bracket * QEuler(c, m, alpha, p * n, shifted);
}

// (1+q^N)/(1+q^{pN}) sum_{i<p, p does not divide a+iN} w_i C(m, (a+iN)_{pN}, pN)
// with w_i = (-1)^i (printed) or (-q^N)^i (corrected).
template <class Ctx>
typename Ctx::Value RecursionRhs(const Ctx& c, long m, long a, long n,
                                 long alpha, long p, Variant factor,
                                 CTildeVariant variant) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long i = 0; i < p; ++i) {
    if (Mod(a + i * n, p) == 0) continue;
    sum = sum + AlternatingWeight(c, i, n, factor == Variant::kCorrected) *
                    CTildeInteger(c, m, Mod(a + i * n, p * n), p * n, alpha, p,
                                  variant);
  }
  return c.Div(c.Const(1) + c.QPow(Rational(n)),
               c.Const(1) + c.QPow(Rational(p * n))) *
         sum;
}

// [k]^{m+1} J_{m,q}(h,k : q^k).
template <class Ctx>
typename Ctx::Value Eq6Lhs(const Ctx& c, long m, long h, long k, long alpha) {
  return Power(c, Bracket(c, Rational(k), alpha), m + 1) *
         DcSumQ(c, m, h, k, alpha, k);
}

// sum_M (-1)^{M-1} [M] [k]^m E_{m,q^k}(y_M), where y_M is hM/k as printed
// in the integral, or (hM)_k / k in the corrected reading.
template <class Ctx>
typename Ctx::Value Eq6Rhs(const Ctx& c, long m, long h, long k, long alpha,
                           Variant variant) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long M = 1; M < k; ++M) {
    long a = variant == Variant::kPrinted ? h * M : Mod(h * M, k);
    V term = Bracket(c, Rational(M), alpha) * CTildeNaive(c, m, a, k, alpha);
    sum = (M % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

// Splitting of E_{k,q}(x) over `modulus` residue classes.
template <class Ctx>
typename Ctx::Value Eq7Rhs(const Ctx& c, long power, long alpha,
                           const Rational& x, long modulus, Variant variant) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long i = 0; i < modulus; ++i) {
    sum = sum + AlternatingWeight(c, i, 1, variant == Variant::kCorrected) *
                    QEuler(c, power, alpha, modulus,
                           (x + Rational(i)) / Rational(modulus));
  }
  return Power(c, Bracket(c, Rational(modulus), alpha), power) *
         c.Div(c.Const(1) + c.QPow(Rational(1)),
               c.Const(1) + c.QPow(Rational(modulus))) *
         sum;
}

// p-fold splitting of [N]^m E_{m,q^N}(a/N) without exclusions.
template <class Ctx>
typename Ctx::Value Eq8Rhs(const Ctx& c, long m, long a, long n, long p,
                           long alpha, Variant variant) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long i = 0; i < p; ++i) {
    sum = sum + AlternatingWeight(c, i, n, variant == Variant::kCorrected) *
                    QEuler(c, m, alpha, p * n,
                           Rational(BigInt(a + i * n), BigInt(p * n)));
  }
  return c.Div(c.Const(1) + c.QPow(Rational(n)),
               c.Const(1) + c.QPow(Rational(p * n))) *
         Power(c, Bracket(c, Rational(p * n), alpha), m) * sum;
}

// sum_M (-1)^{M-1} [M]_{q^alpha} C(m, (hM)_k, k : q^k).
template <class Ctx>
typename Ctx::Value DefinitionSum(const Ctx& c, long m, long h, long k,
                                  long alpha, long p, CTildeVariant variant) {
  using V = typename Ctx::Value;
  V sum = c.Const(0);
  for (long M = 1; M < k; ++M) {
    V term = Bracket(c, Rational(M), alpha) *
             CTildeInteger(c, m, Mod(h * M, k), k, alpha, p, variant);
    sum = (M % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

// [k]^{m+1} J_m(h,k : q^k) - [k]^{m+1} R J_m((p^{-1}h)_k, k : q^{pk}) with
// R = [pk]/[k] (printed) or ([pk]/[k])^m (corrected).
template <class Ctx>
typename Ctx::Value Theorem1Rhs(const Ctx& c, long m, long h, long k,
                                long alpha, long p, Variant form) {
  using V = typename Ctx::Value;
  V lead = Power(c, Bracket(c, Rational(k), alpha), m + 1);
  V ratio = Geometric(c, p, Rational(alpha * k));
  if (form == Variant::kCorrected) ratio = Power(c, ratio, m);
  long hp = InverseTimes(p, h, k);
  return lead * DcSumQ(c, m, h, k, alpha, k) -
         lead * ratio * DcSumQ(c, m, hp, k, alpha, p * k);
}

}  // namespace qdc::engine

#endif  // QDC_DEDEKIND_FORMULAS_H_
