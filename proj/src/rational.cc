// Copyright 2026 The rcsp authors
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

#include "rcsp/rational.h"

#include <cstddef>

namespace rcsp {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// cpp_int's string constructor treats a leading zero as an octal prefix;
// build base-10 values by hand instead.
BigInt from_digits(std::string_view s) {
  BigInt v = 0;
  for (char c : s) {
    v *= 10;
    v += c - '0';
  }
  return v;
}

}  // namespace

std::optional<Rat> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d = from_digits(den);
    if (d == 0) return std::nullopt;
    Rat v(from_digits(num), d);
    return negative ? -v : v;
  }
  std::size_t dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(text)) return std::nullopt;
    Rat v{from_digits(text)};
    return negative ? -v : v;
  }
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt units = from_digits(whole) * scale + from_digits(frac);
  Rat v(units, scale);
  return negative ? -v : v;
}

std::string format_number(const Rat& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  // Count factors of 2 and 5; a terminating decimal exists iff nothing else
  // remains.
  BigInt rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();
  int digits = twos > fives ? twos : fives;
  BigInt pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  BigInt scaled = num * (pow10 / den);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, digits + 1 - s.size(), '0');
  }
  std::string whole = s.substr(0, s.size() - digits);
  std::string frac = s.substr(s.size() - digits);
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  std::string out = negative ? "-" : "";
  out += whole;
  if (!(frac.size() == 1 && frac[0] == '0')) {
    out += ".";
    out += frac;
  }
  return out;
}

BigInt floor_rat(const Rat& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_rat(const Rat& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

namespace {

// sqrt(p/q) = sqrt(p q) / q; scaling by 2^64 bounds the error of the integer
// square root.
Rat sqrt_scaled(const Rat& v, bool round_up) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt scale = BigInt(1) << 64;
  BigInt root = isqrt(num * den * scale * scale);
  if (round_up && root * root != num * den * scale * scale) ++root;
  return Rat(root, den * scale);
}

}  // namespace

Rat sqrt_below(const Rat& v) { return sqrt_scaled(v, false); }

Rat sqrt_above(const Rat& v) { return sqrt_scaled(v, true); }

}  // namespace rcsp
