// Copyright 2026 The oagame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OAGAME_RATIONAL_H_
#define OAGAME_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace oagame {

using Rational = boost::multiprecision::cpp_rational;

// "3", "-2/3".
std::string to_string(const Rational& value);

// Accepts integers, fractions ("2/3") and plain decimals ("0.8", "-1.25").
// Decimals are converted exactly. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Exact value of a binary double, via its shortest round-trip decimal form,
// so 0.8 becomes 4/5.
Rational rational_from_double(double value);

double to_double(const Rational& value);

}  // namespace oagame

#endif  // OAGAME_RATIONAL_H_
