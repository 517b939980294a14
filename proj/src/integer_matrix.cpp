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

#include "regflow/integer_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "regflow/errors.hpp"

namespace regflow {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimension: return "E_DIMENSION";
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kBoundExceeded: return "E_BOUND";
    case ErrorCode::kNotABase: return "E_NOT_A_BASE";
    case ErrorCode::kNotInLattice: return "E_MEMBERSHIP";
    case ErrorCode::kDomain: return "E_DOMAIN";
    case ErrorCode::kNotPositiveDefinite: return "E_DEFINITENESS";
    case ErrorCode::kPrecondition: return "E_PRECONDITION";
    case ErrorCode::kUsage: return "E_USAGE";
  }
  return "E_UNKNOWN";
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimension,
                "entry count " + std::to_string(entries_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
}

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntegerVector> converted;
  for (const auto& r : rows) {
    IntegerVector v;
    for (long x : r) v.emplace_back(x);
    converted.push_back(std::move(v));
  }
  return from_rows(converted);
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw Error(ErrorCode::kDimension, "ragged rows");
    }
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntegerVector>& cols,
                                          std::size_t height) {
  IntegerMatrix m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t i) const {
  return IntegerVector(entries_.begin() + i * cols_,
                       entries_.begin() + (i + 1) * cols_);
}

IntegerVector IntegerMatrix::col(std::size_t j) const {
  IntegerVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntegerMatrix::set_col(std::size_t j, std::span<const Integer> values) {
  if (values.size() != rows_) {
    throw Error(ErrorCode::kDimension, "column length mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

bool IntegerMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

bool IntegerMatrix::col_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntegerMatrix out(idx.size(), cols_);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t j = 0; j < cols_; ++j) out(a, j) = (*this)(idx[a], j);
  }
  return out;
}

IntegerMatrix IntegerMatrix::select_columns(
    std::span<const std::size_t> idx) const {
  IntegerMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t b = 0; b < idx.size(); ++b) out(i, b) = (*this)(i, idx[b]);
  }
  return out;
}

IntegerMatrix IntegerMatrix::submatrix(std::span<const std::size_t> row_idx,
                                       std::span<const std::size_t> col_idx) const {
  IntegerMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a) {
    for (std::size_t b = 0; b < col_idx.size(); ++b) {
      out(a, b) = (*this)(row_idx[a], col_idx[b]);
    }
  }
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t expected,
                  const char* axis) {
  if (labels.empty()) return;
  if (labels.size() != expected) {
    throw Error(ErrorCode::kDimension,
                std::string(axis) + " label count mismatch");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kPrecondition,
                  std::string("duplicate ") + axis + " label '" + l + "'");
    }
  }
}

}  // namespace

void IntegerMatrix::set_row_labels(std::vector<std::string> labels) {
  check_labels(labels, rows_, "row");
  row_labels_ = std::move(labels);
}

void IntegerMatrix::set_col_labels(std::vector<std::string> labels) {
  check_labels(labels, cols_, "column");
  col_labels_ = std::move(labels);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimension, "product of incompatible shapes");
  }
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

IntegerVector operator*(const IntegerMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::kDimension, "matrix-vector shape mismatch");
  }
  IntegerVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

namespace {

template <typename Op>
IntegerMatrix elementwise(const IntegerMatrix& a, const IntegerMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimension, "elementwise shape mismatch");
  }
  IntegerMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = op(a(i, j), b(i, j));
  }
  return c;
}

}  // namespace

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  return elementwise(a, b, [](const Integer& x, const Integer& y) -> Integer {
    return x + y;
  });
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  return elementwise(a, b, [](const Integer& x, const Integer& y) -> Integer {
    return x - y;
  });
}

IntegerMatrix operator-(const IntegerMatrix& a) {
  IntegerMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  }
  return c;
}

IntegerMatrix hstack(const IntegerMatrix& left, const IntegerMatrix& right) {
  if (left.rows() != right.rows()) {
    throw Error(ErrorCode::kDimension, "hstack row mismatch");
  }
  IntegerMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) {
      out(i, left.cols() + j) = right(i, j);
    }
  }
  return out;
}

IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorCode::kDimension, "vstack column mismatch");
  }
  IntegerMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
      out(top.rows() + i, j) = bottom(i, j);
    }
  }
  return out;
}

IntegerMatrix gram_product(const IntegerMatrix& a) {
  IntegerMatrix g(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      Integer s = 0;
      for (std::size_t e = 0; e < a.rows(); ++e) s += a(e, i) * a(e, j);
      g(i, j) = s;
      g(j, i) = s;
    }
  }
  return g;
}

Integer dot(std::span<const Integer> x, std::span<const Integer> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimension, "dot product length mismatch");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

std::string to_text(const IntegerMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace regflow
