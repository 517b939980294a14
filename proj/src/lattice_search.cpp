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

#include "regflow/lattice_search.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"

namespace regflow {

namespace {

// G = Uᵀ D U with U unit upper triangular, so that
// xᵀ G x = Σ_i d_i (x_i + Σ_{j>i} u_ij x_j)².
struct LdlFactor {
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> u;
};

LdlFactor factor(const GramMatrix& g) {
  const std::size_t s = g.order();
  LdlFactor f{std::vector<Rational>(s), std::vector<std::vector<Rational>>(
                                            s, std::vector<Rational>(s))};
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      Rational t = g(i, j);
      for (std::size_t k = 0; k < i; ++k) t -= f.d[k] * f.u[k][i] * f.u[k][j];
      if (j == i) {
        if (sgn(t) <= 0) {
          throw Error(ErrorCode::kNotPositiveDefinite,
                      "Gram matrix is not positive definite (leading minor of order " +
                          std::to_string(i + 1) + ")");
        }
        f.d[i] = t;
        f.u[i][i] = 1;
      } else {
        f.u[i][j] = t / f.d[i];
      }
    }
  }
  return f;
}

class EllipsoidWalker {
 public:
  EllipsoidWalker(const GramMatrix& g, std::span<const Rational> center,
                  const Rational& radius2,
                  const std::function<void(const IntegerVector&)>& visit)
      : f_(factor(g)), center_(center.begin(), center.end()), radius2_(radius2),
        visit_(visit), x_(g.order()) {}

  void run() {
    if (x_.empty()) {
      if (sgn(radius2_) >= 0) visit_(x_);
      return;
    }
    descend(x_.size() - 1, Rational(0));
  }

 private:
  bool fits(std::size_t i, const Integer& xi, const Rational& shift,
            const Rational& used) const {
    Rational y = xi;
    y += shift;
    return used + f_.d[i] * y * y <= radius2_;
  }

  void descend(std::size_t i, const Rational& used) {
    // shift = -c_i + Σ_{j>i} u_ij (x_j - c_j)
    Rational shift = -center_[i];
    for (std::size_t j = i + 1; j < x_.size(); ++j) {
      shift += f_.u[i][j] * (Rational(x_[j]) - center_[j]);
    }
    Rational mid = -shift + Rational(1, 2);
    Integer start;
    mpz_fdiv_q(start.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
    if (!fits(i, start, shift, used)) return;
    auto step = [&](const Integer& xi) {
      x_[i] = xi;
      if (i == 0) {
        visit_(x_);
      } else {
        Rational y = xi;
        y += shift;
        descend(i - 1, used + f_.d[i] * y * y);
      }
    };
    for (Integer xi = start; fits(i, xi, shift, used); --xi) step(xi);
    for (Integer xi = start + 1; fits(i, xi, shift, used); ++xi) step(xi);
  }

  LdlFactor f_;
  std::vector<Rational> center_;
  Rational radius2_;
  const std::function<void(const IntegerVector&)>& visit_;
  IntegerVector x_;
};

}  // namespace

void enumerate_ellipsoid(const GramMatrix& g, std::span<const Rational> center,
                         const Rational& radius2,
                         const std::function<void(const IntegerVector&)>& visit) {
  if (center.size() != g.order()) {
    throw Error(ErrorCode::kDimension, "ellipsoid centre has the wrong length");
  }
  EllipsoidWalker(g, center, radius2, visit).run();
}

std::vector<IntegerVector> short_vectors(const GramMatrix& g, const Integer& max_norm) {
  std::vector<IntegerVector> out;
  const std::vector<Rational> origin(g.order());
  enumerate_ellipsoid(g, origin, Rational(max_norm), [&](const IntegerVector& x) {
    if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return sgn(v) != 0; })) {
      out.push_back(x);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

Integer bilinear(const GramMatrix& g, std::span<const Integer> x,
                 std::span<const Integer> y) {
  Integer s = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < g.order(); ++j) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

namespace {

std::map<Integer, std::size_t> norm_histogram(const GramMatrix& g,
                                              const std::vector<IntegerVector>& vecs) {
  std::map<Integer, std::size_t> h;
  for (const auto& v : vecs) ++h[bilinear(g, v, v)];
  return h;
}

class IsometrySearch {
 public:
  IsometrySearch(const GramMatrix& a, const GramMatrix& b,
                 const std::vector<IntegerVector>& pool)
      : a_(a), b_(b), chosen_(a.order()) {
    const std::size_t s = a.order();
    candidates_.assign(s, {});
    images_.assign(s, {});
    for (const auto& v : pool) {
      const Integer n = bilinear(b, v, v);
      IntegerVector bv(s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) bv[i] += b(i, j) * v[j];
      }
      for (std::size_t i = 0; i < s; ++i) {
        if (n == a(i, i)) {
          candidates_[i].push_back(v);
          images_[i].push_back(bv);
        }
      }
    }
  }

  bool run() { return place(0); }

  IntegerMatrix result() const {
    return IntegerMatrix::from_columns(chosen_, a_.order());
  }

 private:
  bool place(std::size_t i) {
    if (i == a_.order()) return true;
    for (std::size_t c = 0; c < candidates_[i].size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = dot(images_[i][c], chosen_[j]) == a_(i, j);
      }
      if (!ok) continue;
      chosen_[i] = candidates_[i][c];
      if (place(i + 1)) return true;
    }
    return false;
  }

  const GramMatrix& a_;
  const GramMatrix& b_;
  std::vector<std::vector<IntegerVector>> candidates_;
  std::vector<std::vector<IntegerVector>> images_;
  std::vector<IntegerVector> chosen_;
};

}  // namespace

std::optional<IntegerMatrix> find_isometry(const GramMatrix& a, const GramMatrix& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 0) return IntegerMatrix(0, 0);
  if (determinant(a.entries()) != determinant(b.entries())) return std::nullopt;

  // Images of a's basis vectors have norm at most max a_ii.
  Integer reach = 0;
  for (std::size_t i = 0; i < a.order(); ++i) reach = std::max(reach, Integer(a(i, i)));
  const auto pool_a = short_vectors(a, reach);
  const auto pool_b = short_vectors(b, reach);
  if (norm_histogram(a, pool_a) != norm_histogram(b, pool_b)) return std::nullopt;

  IsometrySearch search(a, b, pool_b);
  if (!search.run()) return std::nullopt;
  return search.result();
}

}  // namespace regflow
