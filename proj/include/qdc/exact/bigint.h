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

#ifndef QDC_EXACT_BIGINT_H_
#define QDC_EXACT_BIGINT_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qdc {

// Arbitrary-precision signed integer. Backed by GMP; zero has sign 0 and
// the limb representation never carries leading zeros.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(v) {}            // NOLINT(runtime/explicit)
  BigInt(long v) : v_(v) {}           // NOLINT(runtime/explicit)
  BigInt(long long v);                // NOLINT(runtime/explicit)
  BigInt(unsigned long v) : v_(v) {}  // NOLINT(runtime/explicit)
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

  // Base-10 parse; accepts an optional leading sign. Throws ParseError.
  static BigInt FromString(std::string_view text);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_int64() const;
  int64_t to_int64() const;  // throws ResourceError when out of range
  size_t bit_length() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }

  std::string ToString() const { return v_.get_str(10); }
  const mpz_class& mpz() const { return v_; }
  mpz_class& mpz() { return v_; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    return BigInt(mpz_class(a.v_ + b.v_));
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    return BigInt(mpz_class(a.v_ - b.v_));
  }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    return BigInt(mpz_class(a.v_ * b.v_));
  }
  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

// Quotient rounded toward -infinity. Throws DivisionByZeroError.
BigInt FloorDiv(const BigInt& a, const BigInt& b);
// Remainder with the sign of b (0 <= r < b for b > 0).
BigInt FloorMod(const BigInt& a, const BigInt& b);
BigInt Gcd(const BigInt& a, const BigInt& b);
BigInt Abs(const BigInt& a);
BigInt Pow(const BigInt& base, unsigned long exponent);
BigInt Binomial(unsigned long n, unsigned long k);

}  // namespace qdc

#endif  // QDC_EXACT_BIGINT_H_
