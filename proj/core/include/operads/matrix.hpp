#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "operads/rational.hpp"

namespace operads {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& v);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

/// Reduced row echelon form: pivots 1, pivot columns strictly increasing,
/// zero elsewhere in pivot columns. Row space preserved. Zero rows sink.
RatMatrix rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// True iff v is a rational linear combination of the basis vectors.
/// Throws LengthMismatch when dimensions differ.
bool in_span(const std::vector<Rational>& v,
             const std::vector<std::vector<Rational>>& basis);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow sparsify(const std::vector<Rational>& dense);
std::vector<Rational> densify(const SparseRow& row, std::size_t cols);

/// Row space accumulator in reduced echelon form. Rows are added one at a
/// time; each is reduced against the current pivots and, when independent,
/// normalized, back-substituted into the existing rows and inserted.
class IncrementalRref {
 public:
  explicit IncrementalRref(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row enlarged the row space.
  bool add_row(SparseRow row);

  /// Residual of v after eliminating every pivot column.
  SparseRow reduce(SparseRow row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Rows in pivot-column order; dense form is the rref matrix.
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }
  RatMatrix to_matrix() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;  // pivot column -> row (pivot coeff 1)
};

}  // namespace operads
