#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vest/bits.hpp"
#include "vest/error.hpp"
#include "vest/scalar.hpp"

namespace vest {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dimension) : entries_(dimension) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_binary() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return vest::is_binary(x); });
  }

  BitVector to_bits() const {
    BitVector out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] != 0) out.set(i);
    return out;
  }

  static Vector from_bits(const BitVector& bits) {
    std::vector<Rational> entries(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits.test(i)) entries[i] = 1;
    return Vector(std::move(entries));
  }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend bool operator<(const Vector& a, const Vector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

inline bool is_zero_vector(const Vector& x) {
  return std::all_of(x.entries().begin(), x.entries().end(), [](const Rational& e) { return e == 0; });
}

/// Rectangular rational matrix. Storage keeps only the nonzero entries of
/// each row, sorted by column; semantically every entry is defined.
class Matrix {
 public:
  struct Entry {
    std::size_t column;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Row = std::vector<Entry>;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  // Rows may be given in any column order; zeros are dropped, duplicates rejected.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Row> sparse_rows)
      : rows_(rows), cols_(cols), data_(std::move(sparse_rows)) {
    if (data_.size() != rows_)
      throw Error(ErrorCode::dimension_mismatch, "row list has " + std::to_string(data_.size()) +
                                                     " rows, expected " + std::to_string(rows_));
    for (auto& row : data_) {
      std::erase_if(row, [](const Entry& e) { return e.value == 0; });
      std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.column < b.column; });
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].column >= cols_)
          throw Error(ErrorCode::dimension_mismatch, "column index " + std::to_string(row[i].column) +
                                                         " outside " + std::to_string(cols_) + " columns");
        if (i > 0 && row[i].column == row[i - 1].column)
          throw Error(ErrorCode::dimension_mismatch, "duplicate column " + std::to_string(row[i].column));
      }
    }
  }

  static Matrix from_dense(const std::vector<std::vector<Rational>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense.front().size() : 0;
    std::vector<Row> data(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      if (dense[r].size() != cols)
        throw Error(ErrorCode::dimension_mismatch, "ragged row " + std::to_string(r));
      for (std::size_t c = 0; c < cols; ++c)
        if (dense[r][c] != 0) data[r].push_back({c, dense[r][c]});
    }
    return Matrix(rows, cols, std::move(data));
  }

  static Matrix identity(std::size_t d) {
    std::vector<Row> data(d);
    for (std::size_t i = 0; i < d; ++i) data[i].push_back({i, Rational(1)});
    return Matrix(d, d, std::move(data));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::span<const Entry> row(std::size_t r) const { return data_.at(r); }

  Rational at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::index_out_of_range, "matrix index out of range");
    for (const auto& e : data_[r])
      if (e.column == c) return e.value;
    return Rational(0);
  }

  std::vector<std::vector<Rational>> to_dense() const {
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& e : data_[r]) out[r][e.column] = e.value;
    return out;
  }

  /// Copy of this matrix with one entry replaced.
  Matrix with_entry(std::size_t r, std::size_t c, const Rational& value) const {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::index_out_of_range, "matrix index out of range");
    auto data = data_;
    std::erase_if(data[r], [c](const Entry& e) { return e.column == c; });
    data[r].push_back({c, value});
    return Matrix(rows_, cols_, std::move(data));
  }

  template <typename F>
  bool all_entries(F&& pred) const {
    for (const auto& row : data_)
      for (const auto& e : row)
        if (!pred(e.value)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Square 0/1 matrix with at most one 1 per row. Row i either zeroes output
/// coordinate i (nullopt) or copies input coordinate `*source(i)`.
class FunctionalMatrix {
 public:
  using RowAction = std::optional<std::size_t>;

  FunctionalMatrix() = default;
  explicit FunctionalMatrix(std::vector<RowAction> actions) : actions_(std::move(actions)) {
    for (const auto& a : actions_)
      if (a && *a >= actions_.size())
        throw Error(ErrorCode::dimension_mismatch, "copy source " + std::to_string(*a) + " out of range");
  }

  std::size_t dimension() const noexcept { return actions_.size(); }
  const RowAction& source(std::size_t row) const { return actions_[row]; }
  const std::vector<RowAction>& actions() const noexcept { return actions_; }

  Matrix to_matrix() const {
    const std::size_t d = actions_.size();
    std::vector<Matrix::Row> rows(d);
    for (std::size_t i = 0; i < d; ++i)
      if (actions_[i]) rows[i].push_back({*actions_[i], Rational(1)});
    return Matrix(d, d, std::move(rows));
  }

  // A copy per coordinate, no additions; valid in every semiring.
  Vector apply(const Vector& x) const {
    if (x.size() != dimension())
      throw Error(ErrorCode::dimension_mismatch, "vector dimension " + std::to_string(x.size()) +
                                                     " vs matrix " + std::to_string(dimension()));
    std::vector<Rational> out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i)
      if (actions_[i]) out[i] = x[*actions_[i]];
    return Vector(std::move(out));
  }

  BitVector apply(const BitVector& x) const {
    BitVector out(dimension());
    for (std::size_t i = 0; i < actions_.size(); ++i)
      if (actions_[i] && x.test(*actions_[i])) out.set(i);
    return out;
  }

  /// Composition: (this ∘ inner)(x) = this(inner(x)).
  FunctionalMatrix compose(const FunctionalMatrix& inner) const {
    std::vector<RowAction> out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i)
      if (actions_[i]) out[i] = inner.actions_[*actions_[i]];
    return FunctionalMatrix(std::move(out));
  }

  friend bool operator==(const FunctionalMatrix&, const FunctionalMatrix&) = default;

 private:
  std::vector<RowAction> actions_;
};

/// Classifies a square matrix; nullopt means "not functional".
inline std::optional<FunctionalMatrix> to_functional(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::non_square, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  std::vector<FunctionalMatrix::RowAction> actions(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (row.empty()) continue;
    if (row.size() > 1 || row.front().value != 1) return std::nullopt;
    actions[r] = row.front().column;
  }
  return FunctionalMatrix(std::move(actions));
}

inline Vector apply(Semiring s, const Matrix& m, const Vector& x) {
  if (m.cols() != x.size())
    throw Error(ErrorCode::dimension_mismatch, "matrix has " + std::to_string(m.cols()) +
                                                   " columns, vector has dimension " + std::to_string(x.size()));
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc = 0;
    for (const auto& e : m.row(r))
      if (x[e.column] != 0) acc = semiring_add(s, acc, semiring_mul(s, e.value, x[e.column]));
    out[r] = std::move(acc);
  }
  return Vector(std::move(out));
}

inline Vector apply(const FunctionalMatrix& f, const Vector& x) { return f.apply(x); }

/// Product a·b in the given semiring.
inline Matrix multiply(Semiring s, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::dimension_mismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                   std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                   "x" + std::to_string(b.cols()));
  std::vector<Matrix::Row> rows(a.rows());
  std::vector<Rational> acc(b.cols());
  std::vector<bool> touched(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<std::size_t> cols;
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.column)) {
        if (!touched[eb.column]) {
          touched[eb.column] = true;
          acc[eb.column] = 0;
          cols.push_back(eb.column);
        }
        acc[eb.column] = semiring_add(s, acc[eb.column], semiring_mul(s, ea.value, eb.value));
      }
    }
    for (auto c : cols) {
      rows[r].push_back({c, acc[c]});
      touched[c] = false;
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(rows));
}

}  // namespace vest
