#include "planes/linalg.hpp"

#include <stdexcept>

namespace planes {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_)
      throw std::invalid_argument("ragged rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rat> Mat::row(int r) const {
  std::vector<Rat> v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

std::vector<Rat> Mat::col(int c) const {
  std::vector<Rat> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Mat::append_row(const std::vector<Rat>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("row size mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

void Mat::append_col(const std::vector<Rat>& col) {
  if (cols_ == 0 && rows_ == 0) {
    rows_ = static_cast<int>(col.size());
    a_.assign(col.begin(), col.end());
    cols_ = 1;
    return;
  }
  if (static_cast<int>(col.size()) != rows_)
    throw std::invalid_argument("col size mismatch");
  std::vector<Rat> b((rows_) * (cols_ + 1));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) b[r * (cols_ + 1) + c] = at(r, c);
    b[r * (cols_ + 1) + cols_] = col[r];
  }
  a_ = std::move(b);
  ++cols_;
}

Mat Mat::transposed() const {
  Mat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  Mat m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (int c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
    }
  return m;
}

Mat Mat::rref(std::vector<int>* pivot_cols) const {
  Mat m = *this;
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (sgn(m.at(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || sgn(m.at(i, c)) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

int Mat::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

std::vector<std::vector<Rat>> Mat::nullspace() const {
  std::vector<int> piv;
  Mat r = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_piv[c]) continue;
    std::vector<Rat> v(cols_);
    v[c] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(static_cast<int>(k), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> Mat::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("rhs size mismatch");
  Mat aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<int> piv;
  Mat r = aug.rref(&piv);
  for (int c : piv)
    if (c == cols_) return std::nullopt;  // inconsistent
  std::vector<Rat> x(cols_);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at(static_cast<int>(k), cols_);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  Mat aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  std::vector<int> piv;
  Mat rr = aug.rref(&piv);
  if (static_cast<int>(piv.size()) != rows_ || piv.back() >= cols_ ||
      piv[rows_ - 1] != rows_ - 1)
    return std::nullopt;
  Mat inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = rr.at(r, cols_ + c);
  return inv;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

int symmetric_rank(const std::vector<Rat>& a, int n) {
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = a[r * n + c];
  return m.rank();
}

int column_space_intersection_dim(const Mat& a, const Mat& b) {
  // dim(A) + dim(B) - dim(A + B)
  Mat joint = a;
  for (int c = 0; c < b.cols(); ++c) joint.append_col(b.col(c));
  return a.rank() + b.rank() - joint.rank();
}

std::vector<std::vector<Rat>> column_space_intersection(const Mat& a,
                                                        const Mat& b) {
  // x in both spans iff A u = B v: kernel of [A | -B].
  Mat joint(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) joint.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols(); ++c) joint.at(r, a.cols() + c) = -b.at(r, c);
  }
  std::vector<std::vector<Rat>> vecs;
  for (const auto& k : joint.nullspace()) {
    std::vector<Rat> x(a.rows());
    bool nonzero = false;
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) x[r] += a.at(r, c) * k[c];
      if (sgn(x[r]) != 0) nonzero = true;
    }
    if (nonzero) vecs.push_back(std::move(x));
  }
  // Reduce to an independent set.
  Mat span(static_cast<int>(vecs.empty() ? 0 : vecs[0].size()), 0);
  std::vector<std::vector<Rat>> basis;
  for (const auto& v : vecs) {
    Mat trial = span;
    trial.append_col(v);
    if (trial.rank() > span.rank()) {
      span = trial;
      basis.push_back(v);
    }
  }
  return basis;
}

bool in_column_span(const Mat& a, const std::vector<Rat>& v) {
  return a.solve(v).has_value();
}

}  // namespace planes
