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


#include "regflow/reconstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "regflow/errors.hpp"
#include "regflow/exact_linalg.hpp"
#include "regflow/flow_lattice.hpp"
#include "regflow/text_io.hpp"

namespace regflow {

namespace {

// First row equal to e_j for each j, if U already contains I_s.
std::optional<std::vector<std::size_t>> unit_rows(const IntegerMatrix& u) {
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < u.cols(); ++j) {
    std::size_t i = 0;
    for (; i < u.rows(); ++i) {
      bool unit = true;
      for (std::size_t c = 0; c < u.cols() && unit; ++c) unit = u(i, c) == (c == j ? 1 : 0);
      if (unit) break;
    }
    if (i == u.rows()) return std::nullopt;
    rows.push_back(i);
  }
  return rows;
}

}  // namespace

GPositiveBasis to_g_positive_basis(const GramMatrix& a, const IntegerMatrix& u,
                                   const Limits& limits) {
  if (u.cols() != a.order() || !(gram_product(u) == a.entries())) {
    throw Error(ErrorCode::kPrecondition, "certificate does not reproduce the Gram matrix");
  }
  GPositiveBasis out;
  out.identity_rows = unit_rows(u).value_or(independent_rows(u));
  if (out.identity_rows.size() != a.order()) {
    throw Error(ErrorCode::kPrecondition, "certificate has deficient column rank");
  }
  out.transform = inverse_unimodular(u.select_rows(out.identity_rows));
  out.q = u * out.transform;
  if (!is_totally_unimodular(out.q, limits.tu_order).holds) {
    throw Error(ErrorCode::kPrecondition, "rebased certificate is not totally unimodular");
  }
  out.gram = GramMatrix(gram_product(out.q));
  if (!classify(out.gram, limits).g_positive) {
    throw std::logic_error("rebased Gram matrix is not g-positive");
  }
  return out;
}

namespace {

void complete_from_certificate(ReconstructionReport& report, const Limits& limits) {
  const GPositiveBasis rebased = to_g_positive_basis(report.gram, *report.certificate, limits);
  const IntegerMatrix& q = rebased.q;
  const std::size_t s = q.cols();

  std::vector<std::size_t> other_rows;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    if (std::find(rebased.identity_rows.begin(), rebased.identity_rows.end(), i) ==
        rebased.identity_rows.end()) {
      other_rows.push_back(i);
    }
  }
  const std::size_t r = other_rows.size();

  // L = -K with each row's first nonzero entry made positive.
  IntegerMatrix l = -q.select_rows(other_rows);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = 0;
    while (j < s && sgn(l(i, j)) == 0) ++j;
    if (j == s) throw std::logic_error("zero row in the L block");
    if (sgn(l(i, j)) < 0) {
      for (std::size_t c = 0; c < s; ++c) l(i, c) = -l(i, c);
    }
  }
  report.block_basis = vstack(-l, IntegerMatrix::identity(s));

  IntegerMatrix standard = hstack(IntegerMatrix::identity(r), l);
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < r + s; ++e) labels.push_back("e" + std::to_string(e + 1));
  standard.set_col_labels(labels);
  RegularMatroid m = RegularMatroid::from_trusted(labels, standard);
  if (!loops_and_coloops(m).coloops.empty()) {
    throw std::logic_error("reconstructed matroid has a co-loop");
  }
  std::vector<std::size_t> base(r);
  for (std::size_t e = 0; e < r; ++e) base[e] = e;
  if (!(fundamental_basis(m, GroundSubset(base)).basis() == *report.block_basis)) {
    throw std::logic_error("block basis is not the fundamental basis of the result");
  }
  report.standard_form = std::move(standard);
  report.matroid = std::move(m);
}

}  // namespace

ReconstructionReport reconstruct_matroid(const GramMatrix& a, const Limits& limits) {
  if (const std::size_t k = a.first_nonpositive_leading_minor(); k != 0) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "Gram matrix is not positive definite: leading minor of order " +
                    std::to_string(k) + " is not positive");
  }
  ReconstructionReport report;
  report.gram = a;
  report.feasibility = is_g_feasible(a, limits);
  if (!report.feasibility.feasible()) return report;
  report.certificate = report.feasibility.certificate;
  complete_from_certificate(report, limits);
  return report;
}

ReconstructionReport reconstruct_from_basis(const IntegerMatrix& basis, const Limits& limits) {
  gram_of(basis);
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (!basis.row_is_zero(i)) nonzero.push_back(i);
  }
  const IntegerMatrix u = basis.select_rows(nonzero);
  const auto rows = independent_rows(u);
  const IntegerMatrix z = u.select_rows(rows);
  const Integer det = determinant(z);
  if (abs(det) != 1) {
    throw Error(ErrorCode::kPrecondition,
                "not a basis of a regular flow lattice: an invertible row block has determinant " +
                    det.get_str());
  }
  const IntegerMatrix q = u * inverse_unimodular(z);
  const auto tu = is_totally_unimodular(q, limits.tu_order);
  if (!tu.holds) {
    throw Error(ErrorCode::kPrecondition,
                "not a basis of a regular flow lattice: rebased basis is not totally unimodular");
  }
  ReconstructionReport report = reconstruct_matroid(GramMatrix(gram_product(q)), limits);
  report.zero_rows = basis.rows() - nonzero.size();
  return report;
}

std::string to_text(const ReconstructionReport& report) {
  std::ostringstream os;
  os << "VERDICT\n";
  if (report.feasible()) {
    os << "G-FEASIBLE\n";
  } else {
    os << "NOT-G-FEASIBLE " << report.feasibility.verdict_line() << '\n';
  }
  os << "GRAM\n" << gram_text(report.gram);
  if (report.feasibility.x) os << "X\n" << *report.feasibility.x;
  if (!report.feasible()) return os.str();
  os << "CERTIFICATE\n" << *report.certificate;
  os << "STANDARD-FORM\n" << *report.standard_form;
  os << "MATROID\n" << matroid_text(*report.matroid);
  os << "rank " << report.matroid->rank() << " elements " << report.matroid->size()
     << " zero-rows " << report.zero_rows << '\n';
  return os.str();
}

IsometryResult flow_lattices_isometric(const RegularMatroid& m, const RegularMatroid& n,
                                       const Limits& limits) {
  IsometryResult result;
  RegularMatroid first = contract_coloops(m);
  RegularMatroid second = contract_coloops(n);
  const IsomorphismResult iso = is_isomorphic(first, second, limits);
  if (!iso.isomorphic) return result;

  const GroundSubset base = first.first_base();
  std::vector<std::size_t> image;
  for (std::size_t e : base) image.push_back(iso.bijection[e]);
  const GroundSubset image_base(image);

  const IntegerMatrix first_basis = fundamental_basis(first, base).basis();
  const IntegerMatrix second_full = fundamental_basis(second, image_base).basis();

  // Column j of a fundamental basis belongs to the j-th non-base element.
  std::vector<std::size_t> second_free;
  for (std::size_t e = 0; e < second.size(); ++e) {
    if (!image_base.contains(e)) second_free.push_back(e);
  }
  std::vector<std::size_t> columns;
  for (std::size_t e = 0; e < first.size(); ++e) {
    if (base.contains(e)) continue;
    const auto it = std::find(second_free.begin(), second_free.end(), iso.bijection[e]);
    columns.push_back(static_cast<std::size_t>(it - second_free.begin()));
  }
  IntegerMatrix second_basis = second_full.select_columns(columns);

  const IntegerMatrix g1 = gram_product(first_basis);
  const auto signs = matching_column_signs(gram_product(second_basis), g1);
  if (!signs) throw std::logic_error("matched fundamental bases have unrelated Gram matrices");
  for (std::size_t i = 0; i < second_basis.rows(); ++i) {
    for (std::size_t j = 0; j < second_basis.cols(); ++j) second_basis(i, j) *= (*signs)[j];
  }
  if (!(gram_product(second_basis) == g1)) {
    throw std::logic_error("matched fundamental bases have different Gram matrices");
  }

  result.isometric = true;
  result.witness = IsometryWitness{std::move(first), std::move(second), iso.bijection,
                                   first_basis, std::move(second_basis), GramMatrix(g1)};
  return result;
}

IsometryResult cut_lattices_isometric(const RegularMatroid& m, const RegularMatroid& n,
                                      const Limits& limits) {
  return flow_lattices_isometric(dual(m), dual(n), limits);
}

IsometryResult mixed_isometric(const RegularMatroid& m, const RegularMatroid& n,
                               const Limits& limits) {
  return flow_lattices_isometric(m, dual(n), limits);
}

}  // namespace regflow
