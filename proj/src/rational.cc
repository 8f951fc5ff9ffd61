// Copyright 2026 The Authors.
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

#include "csfm/rational.h"

#include <cctype>
#include <stdexcept>
#include <string>

namespace csfm {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// e lies strictly between these two fractions.
const Rational& ELower() {
  static const Rational kValue("2718281828/1000000000");
  return kValue;
}
const Rational& EUpper() {
  static const Rational kValue("2718281829/1000000000");
  return kValue;
}

Rational Power(const Rational& base, std::int64_t exponent) {
  Rational result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view numerator = text;
  std::string_view denominator = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    numerator = text.substr(0, slash);
    denominator = text.substr(slash + 1);
  }
  if (!IsIntegerLiteral(numerator) || !IsIntegerLiteral(denominator) ||
      denominator[0] == '-' || denominator[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected p/q)");
  }
  std::string num(numerator);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num, 10);
  mpz_class q(std::string(denominator), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  Rational value(p, q);
  value.canonicalize();
  return value;
}

Rational Fraction(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string FormatRational(const Rational& input) {
  Rational value(input);
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string FormatDecimal(const Rational& value, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs(value) * scale;
  // Round half up on the magnitude.
  mpz_class rounded = (scaled.get_num() * 2 + scaled.get_den()) /
                      (scaled.get_den() * 2);
  mpz_class whole = rounded / scale;
  mpz_class frac = rounded % scale;
  std::string frac_str = frac.get_str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = (value < 0 && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

double ToDouble(const Rational& value) { return value.get_d(); }

std::int64_t Floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

std::int64_t Ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

std::int64_t CeilNaturalLog(const Rational& x) {
  if (x <= 0) throw std::domain_error("logarithm of a non-positive value");
  // We look for the smallest k with x <= b_k, where b_k <= e^k is a
  // guaranteed lower bound on e^k. Any k found this way satisfies
  // e^k >= x, so the answer is never too small.
  if (x <= 1) {
    std::int64_t k = 0;
    // For negative k, EUpper()^k < e^k.
    while (x <= 1 / Power(EUpper(), -(k - 1))) --k;
    return k;
  }
  std::int64_t k = 1;
  Rational bound = ELower();
  while (x > bound) {
    ++k;
    bound *= ELower();
  }
  return k;
}

std::int64_t CeilLog2(const Rational& x) {
  if (x <= 0) throw std::domain_error("logarithm of a non-positive value");
  std::int64_t k = 0;
  Rational bound = 1;
  if (x <= 1) {
    while (x <= bound / 2) {
      bound /= 2;
      --k;
    }
    return k;
  }
  while (x > bound) {
    bound *= 2;
    ++k;
  }
  return k;
}

}  // namespace csfm
