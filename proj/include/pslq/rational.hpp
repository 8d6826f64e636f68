// Copyright 2026 The pslq Authors
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

#ifndef PSLQ_RATIONAL_HPP_
#define PSLQ_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pslq {

// Exact arbitrary-precision rational. Always canonical: lowest terms with a
// positive denominator. Arithmetic results are materialized immediately so no
// GMP expression template ever escapes this type.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed
  // text or a zero denominator.
  static Rational parse(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Display-only decimal rendering with `digits` significant digits.
  std::string decimal(int digits = 20) const;
  double to_double() const { return value_.get_d(); }

  bool is_integer() const;
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational floor() const;
  Rational ceil() const;
  // Numerator/denominator as decimal strings (exact, any size).
  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }
  // True when the denominator divides `m`.
  bool denominator_divides(std::uint64_t m) const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

inline Rational positive_part(const Rational& x) {
  return x.sign() > 0 ? x : Rational{};
}

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace pslq

#endif  // PSLQ_RATIONAL_HPP_
