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

#include "kt/kt_graph.hpp"

#include <algorithm>

#include "kt/error.hpp"
#include "kt/parallel.hpp"

namespace kt {
namespace {

void check_left(const KTParams& params, const Poly& f) {
  require_same_field(params.field, f.field());
  if (f.degree() >= static_cast<int>(params.n)) {
    throw Error(ErrorCode::kShapeError, "left vertex must have degree < n");
  }
}

void check_seed(const KTParams& params, Elem y) {
  if (!params.field->contains(y)) {
    throw Error(ErrorCode::kFieldMismatch, "seed outside the field");
  }
}

void check_right(const KTParams& params, const RightVertex& w) {
  check_seed(params, w.seed);
  if (w.z.size() != params.s + 1) {
    throw Error(ErrorCode::kShapeError, "right vertex needs s+1 values");
  }
  for (Elem e : w.z) check_seed(params, e);
}

std::uint64_t chunk_for(std::uint64_t total) {
  return std::max<std::uint64_t>(1, (total + 63) / 64);
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw Error(ErrorCode::kTooLarge, std::to_string(base) + "^" +
                                            std::to_string(exp) +
                                            " overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

KTParams make_kt_params(FieldRef field, unsigned n, unsigned s) {
  if (!field) throw Error(ErrorCode::kInvalidParams, "missing field");
  if (!(s + 1 < n)) {
    throw Error(ErrorCode::kInvalidParams,
                "KT graph requires s+1 < n (got n=" + std::to_string(n) +
                    ", s=" + std::to_string(s) + ")");
  }
  if (!(n < field->characteristic())) {
    throw Error(ErrorCode::kInvalidParams,
                "KT graph requires n < char(F_q) (got n=" + std::to_string(n) +
                    ", char=" + std::to_string(field->characteristic()) + ")");
  }
  KTParams p{std::move(field), n, s};
  p.num_left();
  p.num_right();
  return p;
}

std::vector<std::string> kt_warnings(const KTParams& params) {
  std::vector<std::string> w;
  if (2 * params.s > params.n) {
    w.push_back("s > n/2: outside the left-expansion regime of the construction");
  }
  if (params.s + 1 < 15) {
    w.push_back("s+1 < 15: the left-expansion bound is stated for s+1 >= 15");
  }
  return w;
}

std::uint64_t left_index(const KTParams& params, const Poly& f) {
  check_left(params, f);
  return f.index();
}

Poly left_from_index(const KTParams& params, std::uint64_t index) {
  if (index >= params.num_left()) {
    throw Error(ErrorCode::kShapeError, "left index out of range");
  }
  return Poly::from_index(params.field, index);
}

std::uint64_t right_index(const KTParams& params, const RightVertex& w) {
  check_right(params, w);
  const std::uint64_t q = params.q();
  std::uint64_t z = 0;
  for (auto it = w.z.rbegin(); it != w.z.rend(); ++it) z = z * q + it->value;
  return w.seed.value + q * z;
}

RightVertex right_from_index(const KTParams& params, std::uint64_t index) {
  if (index >= params.num_right()) {
    throw Error(ErrorCode::kShapeError, "right index out of range");
  }
  const std::uint64_t q = params.q();
  RightVertex w{Elem{static_cast<std::uint32_t>(index % q)},
                Vec(params.s + 1, Elem{0})};
  index /= q;
  for (auto& e : w.z) {
    e = Elem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return w;
}

Vec psi(const KTParams& params, const Poly& f, Elem y) {
  check_left(params, f);
  check_seed(params, y);
  Vec out(params.s + 1);
  Poly d = f;
  for (unsigned j = 0; j <= params.s; ++j) {
    if (j > 0) d = poly_derivative(d, 1);
    out[j] = poly_eval(d, y);
  }
  return out;
}

RightVertex gamma_L(const KTParams& params, const Poly& f, Elem y) {
  return {y, psi(params, f, y)};
}

MatrixFq psi_matrix(const KTParams& params, Elem y) {
  check_seed(params, y);
  const Field& f = *params.field;
  MatrixFq m(params.field, params.s + 1, params.n);
  for (unsigned j = 0; j <= params.s; ++j) {
    for (unsigned i = j; i < params.n; ++i) {
      Elem c = f.pow(y, i - j);
      for (unsigned k = 0; k < j; ++k) c = f.mul(c, f.from_signed(i - k));
      m.at(j, i) = c;
    }
  }
  return m;
}

KTGraph::KTGraph(KTParams params, std::uint64_t enumeration_cap)
    : params_(std::move(params)), cap_(enumeration_cap) {
  const std::uint64_t q = params_.q();
  seeds_.reserve(q);
  for (std::uint64_t y = 0; y < q; ++y) {
    RowEchelon re(psi_matrix(params_, Elem{static_cast<std::uint32_t>(y)}));
    if (re.rank() != params_.s + 1) {
      throw Error(ErrorCode::kInternal, "psi_y is not surjective");
    }
    std::vector<Vec> kernel = re.kernel_basis();
    seeds_.push_back({std::move(re), std::move(kernel)});
  }
}

Poly KTGraph::gamma_R(const RightVertex& w, std::span<const Elem> t) const {
  check_right(params_, w);
  const SeedSolver& solver = seeds_[w.seed.value];
  if (t.size() != solver.kernel.size()) {
    throw Error(ErrorCode::kShapeError, "kernel index needs n-(s+1) entries");
  }
  std::optional<Vec> g = solver.echelon.particular(w.z);
  if (!g) throw Error(ErrorCode::kInternal, "psi_y system inconsistent");
  const Field& f = *params_.field;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!f.contains(t[k])) {
      throw Error(ErrorCode::kFieldMismatch, "kernel index outside the field");
    }
    if (t[k].value == 0) continue;
    const Vec& col = solver.kernel[k];
    for (std::size_t i = 0; i < g->size(); ++i) {
      (*g)[i] = f.add((*g)[i], f.mul(t[k], col[i]));
    }
  }
  return Poly(params_.field, std::move(*g));
}

Poly KTGraph::gamma_R(const RightVertex& w, std::uint64_t t_index) const {
  const std::uint64_t q = params_.q();
  Vec t(params_.n - params_.s - 1);
  for (auto& e : t) {
    e = Elem{static_cast<std::uint32_t>(t_index % q)};
    t_index /= q;
  }
  return gamma_R(w, t);
}

std::vector<std::uint64_t> KTGraph::right_neighborhood(
    const RightVertex& w) const {
  const std::uint64_t degree = params_.right_degree();
  if (degree > cap_) {
    throw Error(ErrorCode::kTooLarge,
                "right degree " + std::to_string(degree) +
                    " exceeds the enumeration cap " + std::to_string(cap_));
  }
  check_right(params_, w);
  const SeedSolver& solver = seeds_[w.seed.value];
  const Vec base = *solver.echelon.particular(w.z);
  const Field& f = *params_.field;
  const std::uint64_t q = params_.q();
  const std::size_t dim = solver.kernel.size();

  // Walk t in base-q order, updating the running vector one digit at a time.
  std::vector<std::uint64_t> out;
  out.reserve(degree);
  Vec current = base;
  Vec digits(dim, Elem{0});
  for (std::uint64_t t = 0; t < degree; ++t) {
    std::uint64_t idx = 0;
    for (std::size_t i = current.size(); i-- > 0;) idx = idx * q + current[i].value;
    out.push_back(idx);
    // Increment digits; adding kernel column k moves digit k up by one.
    for (std::size_t k = 0; k < dim; ++k) {
      const Vec& col = solver.kernel[k];
      if (digits[k].value + 1 < q) {
        digits[k] = Elem{digits[k].value + 1};
        for (std::size_t i = 0; i < current.size(); ++i) {
          current[i] = f.add(current[i], col[i]);
        }
        break;
      }
      // Wrap digit k from q-1 back to 0: subtract (q-1) * col.
      const Elem back = f.from_int(q - 1);
      digits[k] = Elem{0};
      for (std::size_t i = 0; i < current.size(); ++i) {
        current[i] = f.sub(current[i], f.mul(back, col[i]));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t KTGraph::common_neighbors(const RightVertex& w1,
                                        const RightVertex& w2) const {
  check_right(params_, w1);
  check_right(params_, w2);
  if (w1 == w2) {
    throw Error(ErrorCode::kSameVertex, "common_neighbors needs distinct vertices");
  }
  const MatrixFq stacked = MatrixFq::vstack(psi_matrix(params_, w1.seed),
                                            psi_matrix(params_, w2.seed));
  Vec rhs = w1.z;
  rhs.insert(rhs.end(), w2.z.begin(), w2.z.end());
  const RowEchelon re(stacked);
  if (!re.particular(rhs)) return 0;
  return checked_pow(params_.q(), params_.n - re.rank());
}

std::vector<std::vector<std::uint64_t>> all_right_neighborhoods(
    const KTGraph& graph, unsigned workers) {
  const KTParams& p = graph.params();
  const std::uint64_t total = p.num_right();
  using Block = std::vector<std::vector<std::uint64_t>>;
  auto blocks = parallel_chunks<Block>(
      total, chunk_for(total), workers, [&](std::uint64_t b, std::uint64_t e) {
        Block out;
        out.reserve(e - b);
        for (std::uint64_t r = b; r < e; ++r) {
          out.push_back(graph.right_neighborhood(right_from_index(p, r)));
        }
        return out;
      });
  Block all;
  all.reserve(total);
  for (auto& blk : blocks) {
    for (auto& v : blk) all.push_back(std::move(v));
  }
  return all;
}

std::vector<std::uint64_t> right_degrees_from_left(const KTParams& params,
                                                   unsigned workers) {
  const std::uint64_t left = params.num_left();
  const std::uint64_t right = params.num_right();
  const std::uint64_t q = params.q();
  using Counts = std::vector<std::uint64_t>;
  auto parts = parallel_chunks<Counts>(
      left, chunk_for(left), workers, [&](std::uint64_t b, std::uint64_t e) {
        Counts c(right, 0);
        for (std::uint64_t li = b; li < e; ++li) {
          const Poly f = Poly::from_index(params.field, li);
          for (std::uint64_t y = 0; y < q; ++y) {
            ++c[right_index(params,
                            gamma_L(params, f, Elem{static_cast<std::uint32_t>(y)}))];
          }
        }
        return c;
      });
  Counts total(right, 0);
  for (const auto& c : parts) {
    for (std::uint64_t i = 0; i < right; ++i) total[i] += c[i];
  }
  return total;
}

std::map<std::uint64_t, std::uint64_t> right_degree_histogram(
    const KTParams& params, unsigned workers) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t d : right_degrees_from_left(params, workers)) ++hist[d];
  return hist;
}

void write_graph_header(std::ostream& out, const KTParams& params) {
  const FieldSpec& fs = params.field->spec();
  out << "# q=" << params.q() << "\n# p=" << fs.p << "\n# e=" << fs.e
      << "\n# modulus=" << fs.modulus << "\n# n=" << params.n
      << "\n# s=" << params.s << "\n";
}

void write_edge_list(std::ostream& out, const KTParams& params,
                     std::uint64_t enumeration_cap) {
  const std::uint64_t left = params.num_left();
  const std::uint64_t q = params.q();
  if (left > enumeration_cap / q) {
    throw Error(ErrorCode::kTooLarge, "edge count exceeds the enumeration cap");
  }
  write_graph_header(out, params);
  for (std::uint64_t li = 0; li < left; ++li) {
    const Poly f = Poly::from_index(params.field, li);
    for (std::uint64_t y = 0; y < q; ++y) {
      const RightVertex w = gamma_L(params, f, Elem{static_cast<std::uint32_t>(y)});
      out << li << '\t' << y << '\t' << right_index(params, w) << '\n';
    }
  }
}

}  // namespace kt
