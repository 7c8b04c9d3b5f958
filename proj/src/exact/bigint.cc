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

#include "qdc/exact/bigint.h"

#include <limits>

#include "qdc/error.h"

namespace qdc {

BigInt::BigInt(long long v) {
  static_assert(sizeof(long long) == sizeof(long),
                "LP64 platforms only: mpz_class takes long");
  v_ = static_cast<long>(v);
}

BigInt BigInt::FromString(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  bool digits = !s.empty();
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (i == 0 && c == '-' && s.size() > 1) continue;
    if (c < '0' || c > '9') digits = false;
  }
  if (!digits) throw ParseError("not an integer: '" + std::string(text) + "'");
  return BigInt(mpz_class(s, 10));
}

bool BigInt::fits_int64() const { return v_.fits_slong_p(); }

int64_t BigInt::to_int64() const {
  if (!v_.fits_slong_p()) {
    throw ResourceError("integer does not fit in 64 bits: " + ToString());
  }
  return v_.get_si();
}

BigInt FloorDiv(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZeroError("integer division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt FloorMod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZeroError("integer modulo by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt Gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt Abs(const BigInt& a) { return BigInt(mpz_class(abs(a.mpz()))); }

BigInt Pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt Binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigInt(std::move(r));
}

}  // namespace qdc
