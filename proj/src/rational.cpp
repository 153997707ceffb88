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

#include "kt/rational.hpp"

#include "kt/error.hpp"

namespace kt {

Rational parse_rational(const std::string& text) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidParams, "cannot parse rational '" + text + "'");
  };
  if (text.empty()) throw bad();
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::kZeroDivisor, "zero denominator");
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
    const bool negative = !whole.empty() && whole[0] == '-';
    BigInt w = whole.empty() || whole == "-" ? BigInt(0) : BigInt(whole);
    BigInt f = frac.empty() ? BigInt(0) : BigInt(frac);
    BigInt scale = boost::multiprecision::pow(BigInt(10), frac.size());
    Rational out = Rational(w) + Rational(f, scale) * (negative ? -1 : 1);
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

BigInt floor(const Rational& r) {
  const BigInt& n = boost::multiprecision::numerator(r);
  const BigInt& d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

BigInt ceil(const Rational& r) {
  const BigInt& n = boost::multiprecision::numerator(r);
  const BigInt& d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

}  // namespace kt
