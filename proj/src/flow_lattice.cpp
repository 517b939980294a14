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

#include "regflow/flow_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"
#include "regflow/lattice_search.hpp"

namespace regflow {

GroundSubset FlowVector::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t e = 0; e < coords_.size(); ++e) {
    if (sgn(coords_[e]) != 0) idx.push_back(e);
  }
  return GroundSubset(std::move(idx));
}

bool FlowVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

Integer FlowVector::norm2() const { return dot(coords_, coords_); }

Integer FlowVector::l1_norm() const {
  Integer s = 0;
  for (const auto& x : coords_) s += abs(x);
  return s;
}

FlowVector FlowVector::operator-() const {
  IntegerVector out(coords_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = -coords_[e];
  return FlowVector(std::move(out));
}

FlowVector operator+(const FlowVector& a, const FlowVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimension, "flow length mismatch");
  IntegerVector out(a.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = a[e] + b[e];
  return FlowVector(std::move(out));
}

FlowVector operator-(const FlowVector& a, const FlowVector& b) { return a + (-b); }

FlowVector operator*(const Integer& k, const FlowVector& a) {
  IntegerVector out(a.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = k * a[e];
  return FlowVector(std::move(out));
}

Integer inner(const FlowVector& a, const FlowVector& b) {
  return dot(a.coords(), b.coords());
}

std::string to_text(const FlowVector& v) {
  std::ostringstream os;
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (e > 0) os << ' ';
    os << v[e];
  }
  return os.str();
}

GramMatrix gram_of(const IntegerMatrix& columns) {
  GramMatrix g;
  try {
    g = GramMatrix(gram_product(columns));
  } catch (const Error& e) {
    // A zero column gives a zero diagonal entry.
    throw Error(ErrorCode::kNotPositiveDefinite,
                std::string("basis columns are dependent: ") + e.what());
  }
  if (const std::size_t k = g.first_nonpositive_leading_minor(); k != 0) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "basis columns are dependent: leading minor of order " +
                    std::to_string(k) + " of the Gram matrix vanishes");
  }
  return g;
}

FlowLattice::FlowLattice(IntegerMatrix basis, std::optional<RegularMatroid> source)
    : basis_(std::move(basis)), gram_(gram_of(basis_)), source_(std::move(source)) {
  if (source_) {
    if (source_->size() != ambient()) {
      throw Error(ErrorCode::kDimension, "source matroid size differs from ambient dimension");
    }
    if (!(source_->rep() * basis_).is_zero()) {
      throw Error(ErrorCode::kPrecondition, "basis is not in the kernel of the source");
    }
  }
}

FlowVector FlowLattice::basis_vector(std::size_t i) const {
  return FlowVector(basis_.col(i));
}

FlowVector FlowLattice::at(std::span<const Integer> coefficients) const {
  return FlowVector(basis_ * coefficients);
}

std::optional<IntegerVector> FlowLattice::coefficients_of(const FlowVector& v) const {
  if (v.size() != ambient()) {
    throw Error(ErrorCode::kDimension, "vector length " + std::to_string(v.size()) +
                                           " differs from ambient dimension " +
                                           std::to_string(ambient()));
  }
  return solve_integral(basis_, v.coords());
}

FlowLattice fundamental_basis(const RegularMatroid& m, const GroundSubset& base) {
  const Coordinatization c = coordinatize(m, base);
  const std::size_t r = m.rank();
  const std::size_t s = m.nullity();
  IntegerMatrix basis(m.size(), s);
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t col = 0; col < s; ++col) {
      basis(c.order[j], col) = j < r ? Integer(-c.standard(j, r + col))
                                     : Integer(j - r == col ? 1 : 0);
    }
  }
  return FlowLattice(std::move(basis), m);
}

FlowLattice cut_basis(const RegularMatroid& m, const GroundSubset& base) {
  const Coordinatization c = coordinatize(m, base);
  IntegerMatrix basis(m.size(), m.rank());
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < m.rank(); ++i) basis(c.order[j], i) = c.standard(i, j);
  }
  return FlowLattice(std::move(basis), dual(m, base));
}

namespace {

// Kernel vector of rep restricted to `columns` (in that order), scattered
// into ambient coordinates. The restriction must have a 1-dimensional
// kernel.
FlowVector circuit_vector(const IntegerMatrix& rep, std::span<const std::size_t> columns) {
  const IntegerMatrix k = integer_kernel_basis(rep.select_columns(columns));
  if (k.cols() != 1) {
    throw Error(ErrorCode::kPrecondition, "column set is not a circuit");
  }
  IntegerVector coords(rep.cols());
  for (std::size_t q = 0; q < columns.size(); ++q) {
    if (abs(k(q, 0)) > 1) {
      throw Error(ErrorCode::kPrecondition,
                  "circuit vector has an entry of absolute value > 1; "
                  "representation is not totally unimodular");
    }
    coords[columns[q]] = k(q, 0);
  }
  return FlowVector(std::move(coords));
}

FlowVector oriented(FlowVector v) {
  for (const auto& x : v.coords()) {
    if (sgn(x) != 0) return sgn(x) > 0 ? v : -v;
  }
  return v;
}

// A simple flow conforming to beta (nonzero kernel vector): its support
// lies in supp(beta) and it agrees in sign with beta there. Follows the
// minimal-counterexample argument: take a circuit inside the support,
// pivot on the element where |beta| is smallest, and recurse on the
// strictly smaller support of beta - |beta(e)|·alpha.
FlowVector conforming_flow(const IntegerMatrix& rep, FlowVector beta) {
  while (true) {
    const GroundSubset support = beta.support();
    const std::vector<std::size_t>& cols = support.indices();
    const auto pivots = independent_columns(rep.select_columns(cols));
    // Greedy pivots are a prefix-closed choice, so the first non-pivot
    // position closes the circuit with the smallest largest element.
    std::size_t first_dependent = 0;
    while (first_dependent < pivots.size() && pivots[first_dependent] == first_dependent) {
      ++first_dependent;
    }
    if (first_dependent >= cols.size()) {
      throw Error(ErrorCode::kNotInLattice, "support of the flow is independent");
    }
    const std::vector<std::size_t> closing(cols.begin(),
                                           cols.begin() + first_dependent + 1);
    FlowVector alpha = circuit_vector(rep, closing);

    std::size_t pivot = rep.cols();
    for (std::size_t e : alpha.support()) {
      if (pivot == rep.cols() || abs(beta[e]) < abs(beta[pivot])) pivot = e;
    }
    if (sgn(alpha[pivot]) != sgn(beta[pivot])) alpha = -alpha;
    FlowVector rest = beta - Integer(abs(beta[pivot])) * alpha;
    if (rest.is_zero()) return alpha;
    beta = std::move(rest);
  }
}

}  // namespace

FlowVector simple_flow_on(const RegularMatroid& m, const GroundSubset& circuit) {
  circuit.check_within(m.size());
  return oriented(circuit_vector(m.rep(), circuit.indices()));
}

std::vector<FlowVector> simple_flows(const RegularMatroid& m, const Limits& limits) {
  std::vector<FlowVector> out;
  for (const auto& c : circuits(m, limits)) {
    FlowVector alpha = simple_flow_on(m, c);
    out.push_back(-alpha);
    std::swap(out.back(), alpha);
    out.push_back(std::move(alpha));
  }
  return out;
}

namespace {

void require_kernel_member(const RegularMatroid& m, const FlowVector& beta) {
  if (beta.size() != m.size()) {
    throw Error(ErrorCode::kDimension, "flow has length " + std::to_string(beta.size()) +
                                           ", expected " + std::to_string(m.size()));
  }
  const IntegerVector image = m.rep() * std::span<const Integer>(beta.coords());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (sgn(image[i]) != 0) {
      throw Error(ErrorCode::kNotInLattice,
                  "not a lattice flow: kernel equation " + std::to_string(i + 1) +
                      " evaluates to " + image[i].get_str());
    }
  }
}

}  // namespace

std::vector<FlowVector> consistent_decompose(const FlowLattice& lattice,
                                             const FlowVector& beta) {
  if (!lattice.source()) {
    throw Error(ErrorCode::kPrecondition, "decomposition needs a lattice with a source matroid");
  }
  const RegularMatroid& m = *lattice.source();
  require_kernel_member(m, beta);

  std::vector<FlowVector> parts;
  FlowVector rest = beta;
  while (!rest.is_zero()) {
    const FlowVector alpha = conforming_flow(m.rep(), rest);
    // Subtracting alpha as often as every coordinate allows keeps the
    // remainder sign-consistent with beta.
    Integer times = -1;
    for (std::size_t e : alpha.support()) {
      if (times < 0 || abs(rest[e]) < times) times = abs(rest[e]);
    }
    if (times <= 0) throw std::logic_error("simple flow does not conform to the remainder");
    for (Integer t = 0; t < times; ++t) parts.push_back(alpha);
    rest = rest - times * alpha;
  }
  return parts;
}

std::optional<std::string> check_consistent_decomposition(
    const RegularMatroid& m, const FlowVector& beta, std::span<const FlowVector> parts) {
  FlowVector sum(IntegerVector(beta.size()));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const FlowVector& a = parts[k];
    const std::string tag = "part " + std::to_string(k + 1) + ": ";
    if (a.size() != beta.size()) return tag + "wrong length";
    for (std::size_t e = 0; e < a.size(); ++e) {
      if (abs(a[e]) > 1) return tag + "entry outside {-1,0,1}";
      if (sgn(a[e]) != 0 && sgn(beta[e]) == 0) return tag + "support not inside supp(beta)";
      if (sgn(a[e]) * sgn(beta[e]) < 0) return tag + "sign disagrees with beta";
    }
    const GroundSubset supp = a.support();
    if (supp.empty()) return tag + "zero vector";
    const auto image = m.rep() * std::span<const Integer>(a.coords());
    for (const auto& x : image) {
      if (sgn(x) != 0) return tag + "not in the kernel";
    }
    if (m.rank_of(supp) + 1 != supp.size()) return tag + "support is not a circuit";
    for (std::size_t e : supp) {
      std::vector<std::size_t> smaller;
      for (std::size_t f : supp) {
        if (f != e) smaller.push_back(f);
      }
      if (m.rank_of(GroundSubset(smaller)) != smaller.size()) {
        return tag + "support is not a circuit";
      }
    }
    sum = sum + a;
  }
  if (sum != beta) return std::string("parts do not sum to beta");
  return std::nullopt;
}

SimplicityVerdict is_simple_element(const GramMatrix& gram, const IntegerVector& coefficients) {
  if (coefficients.size() != gram.order()) {
    throw Error(ErrorCode::kDimension, "coefficient vector has the wrong length");
  }
  if (std::all_of(coefficients.begin(), coefficients.end(),
                  [](const Integer& x) { return sgn(x) == 0; })) {
    throw Error(ErrorCode::kDomain, "simple elements are nonzero");
  }
  const Integer norm = bilinear(gram, coefficients, coefficients);

  // ⟨β, α - β⟩ >= 0  ⇔  (β - α/2)ᵀ G (β - α/2) <= ⟨α, α⟩ / 4, a ball that
  // lies inside ⟨β, β⟩ <= ⟨α, α⟩.
  std::vector<Rational> center(coefficients.size());
  for (std::size_t i = 0; i < center.size(); ++i) center[i] = Rational(coefficients[i], 2);
  for (auto& c : center) c.canonicalize();
  std::optional<IntegerVector> best;
  enumerate_ellipsoid(gram, center, Rational(norm, 4), [&](const IntegerVector& x) {
    if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return sgn(v) == 0; })) return;
    if (x == coefficients) return;
    if (!best || x < *best) best = x;
  });

  SimplicityVerdict v;
  v.simple = !best.has_value();
  if (best) {
    v.beta_coefficients = *best;
    v.gamma_coefficients.resize(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      v.gamma_coefficients[i] = coefficients[i] - (*best)[i];
    }
    v.inner_product = bilinear(gram, v.beta_coefficients, v.gamma_coefficients);
    if (sgn(v.inner_product) < 0) {
      throw Error(ErrorCode::kPrecondition, "ellipsoid witness failed exact recheck");
    }
  }
  return v;
}

SimplicityVerdict is_simple_metric(const FlowLattice& lattice,
                                   const IntegerVector& coefficients) {
  SimplicityVerdict v = is_simple_element(lattice.gram(), coefficients);
  if (!v.simple) {
    v.beta = lattice.at(v.beta_coefficients);
    v.gamma = lattice.at(v.gamma_coefficients);
  }
  return v;
}

SimplicityVerdict is_simple_metric(const FlowLattice& lattice, const FlowVector& alpha) {
  const auto coefficients = lattice.coefficients_of(alpha);
  if (!coefficients) {
    throw Error(ErrorCode::kNotInLattice, "vector is not in the lattice");
  }
  return is_simple_metric(lattice, *coefficients);
}

}  // namespace regflow
