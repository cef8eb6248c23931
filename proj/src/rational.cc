// Copyright 2026 The emocov Authors.
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

#include "emocov/rational.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "emocov/error.h"

namespace emocov {
namespace {

using boost::multiprecision::cpp_int;

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void Fail(std::string_view text) {
  throw Error(ErrorCode::kParse,
              "not an exact number: '" + std::string(text) + "'");
}

cpp_int StripToInt(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return cpp_int(std::string(digits));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  if (text.empty()) Fail(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = !num.empty() && num.front() == '-';
    if (negative) num.remove_prefix(1);
    if (!AllDigits(num) || !AllDigits(den)) Fail(text);
    cpp_int n = StripToInt(num);
    cpp_int d = StripToInt(den);
    if (d == 0) Fail(text);
    Rational r(n, d);
    return negative ? Rational(-r) : r;
  }

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view mantissa = body;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string exp_text(body.substr(e + 1));
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0') Fail(text);
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) Fail(text);
  if (!int_part.empty() && !AllDigits(int_part)) Fail(text);
  if (!frac_part.empty() && !AllDigits(frac_part)) Fail(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  // cpp_int reads a leading 0 as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  cpp_int numerator = digits.empty() ? cpp_int(0) : cpp_int(digits);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rational r;
  if (scale >= 0) {
    r = Rational(numerator, cpp_int(pow(cpp_int(10), scale)));
  } else {
    r = Rational(numerator * cpp_int(pow(cpp_int(10), -scale)));
  }
  return negative ? Rational(-r) : r;
}

Rational RationalFromDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw Error(ErrorCode::kParse, "cannot render double");
  }
  return ParseRational(std::string_view(buf, ptr - buf));
}

std::string NumeratorString(const Rational& value) {
  return boost::multiprecision::numerator(value).str();
}

std::string DenominatorString(const Rational& value) {
  return boost::multiprecision::denominator(value).str();
}

std::string ToFractionString(const Rational& value) {
  return NumeratorString(value) + "/" + DenominatorString(value);
}

std::string ToDecimalString(const Rational& value, int digits) {
  cpp_int scale = pow(cpp_int(10), digits);
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  // round half away from zero: floor((2*num*scale + den) / (2*den))
  cpp_int scaled = (2 * num * scale + den) / (2 * den);
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

double ToRoundedDouble(const Rational& value, int digits) {
  return std::strtod(ToDecimalString(value, digits).c_str(), nullptr);
}

}  // namespace emocov
