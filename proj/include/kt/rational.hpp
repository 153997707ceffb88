// Copyright 2026 The KT Expander Authors.
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

#ifndef KT_RATIONAL_HPP_
#define KT_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" in lowest terms; integers keep the "/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Parses "a/b", an integer, or a plain decimal such as "0.01" exactly.
Rational parse_rational(const std::string& text);

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

inline Rational rational_pow(const Rational& r, unsigned exp) {
  return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(r), exp),
                  boost::multiprecision::pow(boost::multiprecision::denominator(r), exp));
}

// floor and ceil for rationals.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

}  // namespace kt

#endif  // KT_RATIONAL_HPP_
