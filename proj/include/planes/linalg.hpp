#pragma once

#include <optional>
#include <vector>

#include "planes/rational.hpp"

namespace planes {

/// Dense exact rational matrix. Elimination uses the deterministic pivot
/// order: leftmost column, then topmost nonzero row.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

  std::vector<Rat> row(int r) const;
  std::vector<Rat> col(int c) const;
  void append_row(const std::vector<Rat>& row);
  void append_col(const std::vector<Rat>& col);

  Mat transposed() const;
  Mat operator*(const Mat& o) const;

  int rank() const;

  /// Reduced row echelon form; records pivot columns if requested.
  Mat rref(std::vector<int>* pivot_cols = nullptr) const;

  /// Basis of {x : Ax = 0}, in the deterministic free-column order.
  std::vector<std::vector<Rat>> nullspace() const;

  /// Unique or particular solution of Ax = b; nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  /// Inverse of a square matrix; nullopt when singular.
  std::optional<Mat> inverse() const;

  bool is_zero() const;
  bool operator==(const Mat&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Rank of the symmetric matrix given row-major (n x n).
int symmetric_rank(const std::vector<Rat>& a, int n);

/// dim(span(A-cols) ∩ span(B-cols)) where A, B have the same row count.
int column_space_intersection_dim(const Mat& a, const Mat& b);

/// Basis of span(A-cols) ∩ span(B-cols), as vectors in the ambient space.
std::vector<std::vector<Rat>> column_space_intersection(const Mat& a,
                                                        const Mat& b);

/// True iff v lies in the column span of A.
bool in_column_span(const Mat& a, const std::vector<Rat>& v);

}  // namespace planes
