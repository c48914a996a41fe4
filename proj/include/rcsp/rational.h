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

#ifndef RCSP_RATIONAL_H_
#define RCSP_RATIONAL_H_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcsp {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "42", "-3", "2.75", "7/2". Returns nullopt on anything else.
std::optional<Rat> parse_number(std::string_view text);

// Inverse of parse_number: integers as-is, terminating decimals when the
// reduced denominator is 2^a 5^b, "p/q" otherwise.
std::string format_number(const Rat& v);

BigInt floor_rat(const Rat& v);
BigInt ceil_rat(const Rat& v);

// floor(sqrt(v)) over nonnegative integers.
BigInt isqrt(const BigInt& v);

// Rational r with r <= sqrt(v) (resp. >= sqrt(v)), absolute error below
// 1/2^64. v must be nonnegative.
Rat sqrt_below(const Rat& v);
Rat sqrt_above(const Rat& v);

}  // namespace rcsp

#endif  // RCSP_RATIONAL_H_
