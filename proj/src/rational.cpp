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

#include "pslq/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace pslq {
namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through a string
  // only when the value does not fit a long.
  if (value >= LONG_MIN && value <= LONG_MAX) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator), 10),
                     mpz_class(std::to_string(denominator), 10));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "' (negative denominator)");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "' (zero denominator)");
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  mpf_class f(value_, 256);
  mp_exp_t exponent = 0;
  std::string mantissa = f.get_str(exponent, 10, static_cast<std::size_t>(digits));
  if (mantissa.empty() || mantissa == "0") return "0";
  std::string sign;
  if (mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  std::string out;
  if (exponent <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + mantissa;
  } else if (static_cast<std::size_t>(exponent) >= mantissa.size()) {
    out = mantissa +
          std::string(static_cast<std::size_t>(exponent) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(exponent)) + "." +
          mantissa.substr(static_cast<std::size_t>(exponent));
  }
  return sign + out;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

bool Rational::denominator_divides(std::uint64_t m) const {
  mpz_class mm(std::to_string(m), 10);
  return mpz_divisible_p(mm.get_mpz_t(), value_.get_den_mpz_t()) != 0;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace pslq
