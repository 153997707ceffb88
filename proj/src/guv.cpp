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

#include "kt/guv.hpp"

#include <algorithm>

#include "kt/error.hpp"
#include "kt/kt_graph.hpp"
#include "kt/parallel.hpp"

namespace kt {

GUVParams make_guv_params(FieldRef field, unsigned n, unsigned m, std::uint64_t h,
                          Poly z) {
  if (!field) throw Error(ErrorCode::kInvalidField, "missing field");
  require_same_field(field, z.field());
  if (!(field->order() > h)) {
    throw Error(ErrorCode::kInvalidParams, "GUV requires q > h");
  }
  if (h < 1) throw Error(ErrorCode::kInvalidParams, "GUV requires h >= 1");
  if (!(m >= 1 && m < n)) {
    throw Error(ErrorCode::kInvalidParams, "GUV requires 1 <= m < n");
  }
  if (z.degree() != static_cast<int>(n) || !z.is_monic()) {
    throw Error(ErrorCode::kInvalidParams, "z must be monic of degree n");
  }
  if (!is_irreducible(z)) throw Error(ErrorCode::kInvalidParams, "z must be irreducible");
  return {std::move(field), n, m, h, std::move(z)};
}

std::vector<std::string> guv_warnings(const GUVParams& params) {
  std::vector<std::string> out;
  if (params.field->characteristic() < params.n) {
    out.push_back("char(F_q) = " + std::to_string(params.field->characteristic()) +
                  " < n = " + std::to_string(params.n));
  }
  return out;
}

namespace {

// f, f^h mod z, ..., f^(h^(m-1)) mod z.
std::vector<Poly> guv_powers(const GUVParams& p, const Poly& f) {
  std::vector<Poly> out;
  out.reserve(p.m);
  out.push_back(poly_mod(f, p.z));
  for (unsigned j = 1; j < p.m; ++j) out.push_back(poly_modpow(out.back(), p.h, p.z));
  return out;
}

}  // namespace

Vec guv_gamma_L(const GUVParams& params, const Poly& f, Elem y) {
  if (f.degree() >= static_cast<int>(params.n)) {
    throw Error(ErrorCode::kInvalidParams, "left vertex must have degree < n");
  }
  Vec out{y};
  for (const Poly& g : guv_powers(params, f)) out.push_back(poly_eval(g, y));
  return out;
}

std::uint64_t guv_right_index(const GUVParams& params, const Vec& neighbor) {
  const std::uint64_t q = params.q();
  std::uint64_t idx = 0;
  for (std::size_t j = neighbor.size(); j-- > 1;) idx = idx * q + neighbor[j].value;
  return neighbor[0].value + q * idx;
}

namespace {

// Fixed-size coefficient arithmetic for the histogram inner loop; a full
// multiplication table is used whenever q^2 is small.
class FastRing {
 public:
  explicit FastRing(const GUVParams& p) : f_(*p.field), n_(p.n), q_(p.q()) {
    if (q_ <= 256) {
      table_.resize(q_ * q_);
      add_table_.resize(q_ * q_);
      neg_table_.resize(q_);
      for (std::uint64_t a = 0; a < q_; ++a) {
        const Elem ea{static_cast<std::uint32_t>(a)};
        neg_table_[a] = f_.neg(ea).value;
        for (std::uint64_t b = 0; b < q_; ++b) {
          const Elem eb{static_cast<std::uint32_t>(b)};
          table_[a * q_ + b] = f_.mul(ea, eb).value;
          add_table_[a * q_ + b] = f_.add(ea, eb).value;
        }
      }
    }
    // rows_[(i q + c) q + y] = c y^i, so evaluating at every y is a sum of
    // n table rows.
    rows_.resize(static_cast<std::size_t>(n_) * q_ * q_);
    for (std::uint64_t y = 0; y < q_; ++y) {
      Elem power = f_.one();
      for (unsigned i = 0; i < n_; ++i) {
        for (std::uint64_t c = 0; c < q_; ++c) {
          rows_[(i * q_ + c) * q_ + y] =
              f_.mul(Elem{static_cast<std::uint32_t>(c)}, power).value;
        }
        power = f_.mul(power, Elem{static_cast<std::uint32_t>(y)});
      }
    }
    xor_add_ = f_.characteristic() == 2;
    z_.resize(n_);
    for (unsigned i = 0; i < n_; ++i) z_[i] = p.z.coeff(i).value;
    scratch_.resize(2 * n_);
    base_.resize(n_);
    acc_.resize(n_);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[a * q_ + b];
    return f_.mul(Elem{a}, Elem{b}).value;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return f_.add(Elem{a}, Elem{b}).value;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (!neg_table_.empty()) return add_table_[a * q_ + neg_table_[b]];
    return f_.sub(Elem{a}, Elem{b}).value;
  }

  // out = a * b mod z; all of length n.
  void mulmod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) {
    std::fill(scratch_.begin(), scratch_.end(), 0u);
    for (unsigned i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        scratch_[i + j] = add(scratch_[i + j], mul(a[i], b[j]));
      }
    }
    for (unsigned k = 2 * n_ - 1; k-- > n_;) {
      const std::uint32_t c = scratch_[k];
      if (c == 0) continue;
      scratch_[k] = 0;
      for (unsigned i = 0; i < n_; ++i) {
        scratch_[k - n_ + i] = sub(scratch_[k - n_ + i], mul(c, z_[i]));
      }
    }
    std::copy(scratch_.begin(), scratch_.begin() + n_, out);
  }

  void powmod(const std::uint32_t* a, std::uint64_t k, std::uint32_t* out) {
    std::copy(a, a + n_, base_.begin());
    bool have = false;
    while (k > 0) {
      if (k & 1) {
        if (have) {
          mulmod(acc_.data(), base_.data(), acc_.data());
        } else {
          acc_ = base_;
          have = true;
        }
      }
      k >>= 1;
      if (k > 0) mulmod(base_.data(), base_.data(), base_.data());
    }
    if (!have) {
      std::fill(acc_.begin(), acc_.end(), 0u);
      acc_[0] = 1;
    }
    std::copy(acc_.begin(), acc_.end(), out);
  }

  // out[y] = a(y) for every y in F_q.
  void eval_all(const std::uint32_t* a, std::uint32_t* out) const {
    const std::uint32_t* row = &rows_[a[0] * q_];
    std::copy(row, row + q_, out);
    for (unsigned i = 1; i < n_; ++i) {
      row = &rows_[(i * q_ + a[i]) * q_];
      if (xor_add_) {
        for (std::uint64_t y = 0; y < q_; ++y) out[y] ^= row[y];
      } else {
        for (std::uint64_t y = 0; y < q_; ++y) out[y] = add(out[y], row[y]);
      }
    }
  }

 private:
  const Field& f_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> rows_;
  bool xor_add_ = false;
  std::vector<std::uint32_t> z_;
  std::vector<std::uint32_t> scratch_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> acc_;
};

}  // namespace

DegreeHistogram guv_right_degree_histogram(const GUVParams& params, unsigned workers,
                                           std::uint64_t enumeration_cap) {
  const std::uint64_t q = params.q();
  const unsigned n = params.n;
  const unsigned m = params.m;
  const std::uint64_t left = checked_pow(q, n);
  const std::uint64_t right = checked_pow(q, m + 1);
  if (left > enumeration_cap / q || right > enumeration_cap) {
    throw Error(ErrorCode::kTooLarge, "GUV edge count q^(n+1) exceeds the enumeration cap");
  }
  using Counts = std::vector<std::uint64_t>;
  auto parts = parallel_chunks<Counts>(left, 4096, workers, [&](std::uint64_t b,
                                                               std::uint64_t e) {
    FastRing ring(params);
    Counts c(right, 0);
    std::vector<std::uint32_t> powers(static_cast<std::size_t>(n) * m);
    std::vector<std::uint32_t> values(static_cast<std::size_t>(q) * m);
    for (std::uint64_t i = b; i < e; ++i) {
      std::uint64_t idx = i;
      for (unsigned k = 0; k < n; ++k) {
        powers[k] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
      }
      for (unsigned j = 1; j < m; ++j) {
        ring.powmod(&powers[(j - 1) * n], params.h, &powers[j * n]);
      }
      for (unsigned j = 0; j < m; ++j) ring.eval_all(&powers[j * n], &values[j * q]);
      for (std::uint64_t y = 0; y < q; ++y) {
        std::uint64_t r = 0;
        for (unsigned j = m; j-- > 0;) r = r * q + values[j * q + y];
        ++c[y + q * r];
      }
    }
    return c;
  });
  Counts total(right, 0);
  for (const Counts& c : parts) {
    for (std::uint64_t i = 0; i < right; ++i) total[i] += c[i];
  }
  DegreeHistogram hist;
  for (std::uint64_t d : total) ++hist[d];
  return hist;
}

std::vector<Poly> monic_irreducibles(const FieldRef& field, unsigned degree) {
  const std::uint64_t q = field->order();
  const std::uint64_t lead = checked_pow(q, degree);
  std::vector<Poly> out;
  for (std::uint64_t low = 0; low < lead; ++low) {
    Poly z = Poly::from_index(field, lead + low);
    if (is_irreducible(z)) out.push_back(std::move(z));
  }
  return out;
}

GUVScan guv_scan(const FieldRef& field, unsigned n, unsigned m, std::uint64_t h,
                 const DegreeHistogram& target, std::uint64_t max_scan,
                 unsigned workers) {
  GUVScan scan;
  const auto zs = monic_irreducibles(field, n);
  scan.candidates = zs.size();
  const std::uint64_t q = field->order();
  const std::uint64_t edges = checked_pow(q, n + 1);
  for (const Poly& z : zs) {
    if (scan.entries.size() >= max_scan) break;
    const GUVParams p = make_guv_params(field, n, m, h, z);
    GUVScanEntry entry{z, guv_right_degree_histogram(p, workers), false, false};
    std::uint64_t mass = 0;
    for (auto [d, c] : entry.histogram) mass += d * c;
    entry.edge_mass_ok = mass == edges;
    entry.matches = entry.histogram == target;
    scan.entries.push_back(std::move(entry));
    if (scan.entries.back().matches) {
      scan.first_match = scan.entries.size() - 1;
      break;
    }
  }
  return scan;
}

}  // namespace kt
