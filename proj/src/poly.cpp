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

#include "kt/poly.hpp"

#include <algorithm>
#include <charconv>

#include "kt/error.hpp"

namespace kt {
namespace {

void strip(std::vector<Elem>& c) {
  while (!c.empty() && c.back().value == 0) c.pop_back();
}

}  // namespace

Poly::Poly(FieldRef field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) {
      throw Error(ErrorCode::kFieldMismatch, "coefficient outside the field");
    }
  }
  strip(coeffs_);
}

Poly Poly::constant(FieldRef field, Elem c) {
  return Poly(std::move(field), {c});
}

Poly Poly::monomial(FieldRef field, Elem c, std::size_t power) {
  std::vector<Elem> v(power + 1, Elem{0});
  v[power] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::shifted_power(FieldRef field, Elem y, std::size_t k) {
  const Poly linear(field, {field->neg(y), field->one()});
  Poly r = constant(field, field->one());
  for (std::size_t i = 0; i < k; ++i) r = r * linear;
  return r;
}

Poly Poly::from_index(FieldRef field, std::uint64_t index) {
  const std::uint64_t q = field->order();
  std::vector<Elem> v;
  while (index != 0) {
    v.push_back(Elem{static_cast<std::uint32_t>(index % q)});
    index /= q;
  }
  return Poly(std::move(field), std::move(v));
}

std::uint64_t Poly::index() const {
  const std::uint64_t q = f().order();
  std::uint64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * q + it->value;
  }
  return r;
}

std::vector<Elem> Poly::padded(std::size_t len) const {
  std::vector<Elem> v(coeffs_);
  if (v.size() > len) {
    throw Error(ErrorCode::kShapeError, "polynomial longer than padding");
  }
  v.resize(len, Elem{0});
  return v;
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f().mul(coeffs_[i], c);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  const Field& f = a.f();
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  const Field& f = a.f();
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = a.f();
  std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, Elem{0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].value == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, std::move(v));
}

Elem poly_eval(const Poly& p, Elem y) {
  const Field& f = p.f();
  Elem acc{0};
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.add(f.mul(acc, y), *it);
  return acc;
}

FieldElement poly_eval(const Poly& p, const FieldElement& y) {
  require_same_field(p.field(), y.field);
  if (!y.field->contains(y.elem)) {
    throw Error(ErrorCode::kFieldMismatch, "element outside its field");
  }
  return {p.field(), poly_eval(p, y.elem)};
}

Poly poly_derivative(const Poly& p, unsigned j) {
  if (j == 0) return p;
  const auto c = p.coeffs();
  if (c.size() <= j) return Poly(p.field());
  const Field& f = p.f();
  std::vector<Elem> v(c.size() - j);
  for (std::size_t i = j; i < c.size(); ++i) {
    // i (i-1) ... (i-j+1), reduced into the prime subfield.
    Elem falling = f.one();
    for (std::size_t k = 0; k < j; ++k) {
      falling = f.mul(falling, f.from_signed(static_cast<std::int64_t>(i - k)));
    }
    v[i - j] = f.mul(falling, c[i]);
  }
  return Poly(p.field(), std::move(v));
}

DivMod poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::kZeroDivisor, "polynomial division by zero");
  const Field& f = a.f();
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem lead_inv = f.inv(bc.back());
  std::vector<Elem> quo(rem.size() - db, Elem{0});
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem c = f.mul(rem[k], lead_inv);
    quo[k - db] = c;
    if (c.value == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, bc[i]));
    }
  }
  rem.resize(db);
  return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) {
  return poly_divmod(a, b).remainder;
}

Poly poly_modpow(const Poly& p, std::uint64_t k, const Poly& z) {
  if (z.is_zero()) throw Error(ErrorCode::kZeroDivisor, "modulus is zero");
  Poly base = poly_mod(p, z);
  Poly r = poly_mod(Poly::constant(p.field(), p.f().one()), z);
  while (k != 0) {
    if (k & 1) r = poly_mod(r * base, z);
    k >>= 1;
    if (k != 0) base = poly_mod(base * base, z);
  }
  return r;
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const FieldRef& fr = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(fr, fr->one()), s1(fr);
  Poly t0(fr), t1 = Poly::constant(fr, fr->one());
  while (!r1.is_zero()) {
    DivMod qr = poly_divmod(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem norm = fr->inv(r0.leading());
  return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

Poly crt_pair(const Poly& r1, const Poly& g1, const Poly& r2, const Poly& g2) {
  ExtGcd eg = poly_ext_gcd(g1, g2);
  if (eg.gcd.degree() != 0) {
    throw Error(ErrorCode::kNonCoprimeModuli, "CRT moduli share a factor");
  }
  // s*g1 = 1 (mod g2), so r1 + (r2 - r1) s g1 satisfies both congruences.
  const Poly modulus = g1 * g2;
  const Poly a = poly_mod(r1, g1);
  return poly_mod(a + (poly_mod(r2, g2) - a) * eg.s * g1, modulus);
}

Poly hermite_interpolate(const FieldRef& field,
                         std::span<const HermitePoint> points, unsigned s) {
  const Field& f = *field;
  const std::uint64_t total = std::uint64_t{points.size()} * (s + 1);
  if (f.characteristic() <= total) {
    throw Error(ErrorCode::kCharTooSmall,
                "characteristic must exceed k(s+1) = " + std::to_string(total));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].values.size() != s + 1) {
      throw Error(ErrorCode::kShapeError, "each node needs s+1 values");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].node == points[j].node) {
        throw Error(ErrorCode::kDuplicateNode,
                    "node " + f.to_string(points[i].node) + " repeated");
      }
    }
  }
  if (points.empty()) return Poly(field);

  Poly acc(field);
  Poly acc_modulus = Poly::constant(field, f.one());
  for (const HermitePoint& pt : points) {
    // Order-s Taylor polynomial sum_j values[j] / j! (x - node)^j.
    Poly taylor(field);
    Poly shift = Poly::constant(field, f.one());
    const Poly linear(field, {f.neg(pt.node), f.one()});
    Elem factorial = f.one();
    for (unsigned j = 0; j <= s; ++j) {
      if (j > 0) {
        factorial = f.mul(factorial, f.from_signed(j));
        shift = shift * linear;
      }
      taylor = taylor + shift.scaled(f.div(pt.values[j], factorial));
    }
    const Poly modulus = shift * linear;
    acc = crt_pair(acc, acc_modulus, taylor, modulus);
    acc_modulus = acc_modulus * modulus;
  }
  return acc;
}

bool is_irreducible(const Poly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const FieldRef& fr = p.field();
  const Poly x = Poly::monomial(fr, fr->one(), 1);
  Poly frob = poly_mod(x, p);
  for (int k = 1; 2 * k <= d; ++k) {
    frob = poly_modpow(frob, fr->order(), p);
    if (poly_ext_gcd(frob - x, p).gcd.degree() != 0) return false;
  }
  return true;
}

std::string to_string(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.coeffs()[i].value);
  }
  return out;
}

Poly parse_poly(const FieldRef& field, std::string_view text) {
  std::vector<Elem> v;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::kShapeError,
                  "bad coefficient '" + std::string(tok) + "'");
    }
    if (value >= field->order()) {
      throw Error(ErrorCode::kFieldMismatch,
                  "coefficient " + std::to_string(value) + " outside the field");
    }
    v.push_back(Elem{static_cast<std::uint32_t>(value)});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Poly(field, std::move(v));
}

}  // namespace kt
