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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace regflow {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers, with optional
// unique row and column labels.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols,
                std::vector<Integer> entries);

  static IntegerMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows);
  static IntegerMatrix from_columns(const std::vector<IntegerVector>& cols,
                                    std::size_t height);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const Integer> entries() const { return entries_; }

  IntegerVector row(std::size_t i) const;
  IntegerVector col(std::size_t j) const;
  void set_col(std::size_t j, std::span<const Integer> values);

  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  bool col_is_zero(std::size_t j) const;

  IntegerMatrix transpose() const;
  IntegerMatrix select_rows(std::span<const std::size_t> idx) const;
  IntegerMatrix select_columns(std::span<const std::size_t> idx) const;
  IntegerMatrix submatrix(std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx) const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  // Throws kDimension on a length mismatch and kPrecondition on duplicates.
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector operator*(const IntegerMatrix& a, std::span<const Integer> x);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a);

IntegerMatrix hstack(const IntegerMatrix& left, const IntegerMatrix& right);
IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom);

// Gram product aᵀ·a.
IntegerMatrix gram_product(const IntegerMatrix& a);

Integer dot(std::span<const Integer> x, std::span<const Integer> y);

// Shared text form: "rows cols" then one line per row.
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);
std::string to_text(const IntegerMatrix& m);

}  // namespace regflow
