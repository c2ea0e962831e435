#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/rational.hpp"

namespace qlab {

using RatVec = std::vector<Rat>;

/// Dense matrix over exact rationals. Immutable in spirit: operations return
/// fresh values, deterministic down to the bit.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(errc::invalid_argument, "ragged initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) fail(errc::invalid_argument, "dimension mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  RatVec apply(const RatVec& v) const {
    if (v.size() != cols_) fail(errc::invalid_argument, "dimension mismatch in apply");
    RatVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  RatMatrix operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::invalid_argument, "dimension mismatch");
    RatMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }

  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(errc::invalid_argument, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form with deterministic pivoting: first nonzero
/// column, smallest row index.
inline RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, {}, 0};
  RatMatrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    Rat inv = Rat(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Basis of the right kernel {v : m v = 0}. One vector per free column, in
/// column order; the free coordinate is set to 1.
inline std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) {
      std::size_t pc = rr.pivot_cols[r];
      v[pc] = -rr.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {w : <w, v> = 0 for all v in rows} under the standard pairing.
inline std::vector<RatVec> orth_complement(const std::vector<RatVec>& rows, std::size_t dim) {
  for (const auto& r : rows)
    if (r.size() != dim) fail(errc::invalid_argument, "orth_complement: row length != dim");
  if (rows.empty()) {
    std::vector<RatVec> basis;
    for (std::size_t k = 0; k < dim; ++k) {
      RatVec v(dim, Rat(0));
      v[k] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel_basis(RatMatrix::from_rows(rows, dim));
}

/// rref-canonical representative of a row span: unique for equal spans.
inline std::vector<RatVec> canonical_span(const std::vector<RatVec>& rows, std::size_t dim) {
  if (rows.empty()) return {};
  RrefResult rr = rref(RatMatrix::from_rows(rows, dim));
  std::vector<RatVec> out;
  for (std::size_t r = 0; r < rr.rank; ++r) {
    RatVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = rr.reduced(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

inline bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                      std::size_t dim) {
  return canonical_span(a, dim) == canonical_span(b, dim);
}

/// Dense integer matrix; the workhorse for Loewy matrices and adjacency data.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(errc::invalid_argument, "ragged initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) fail(errc::invalid_argument, "dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::invalid_argument, "dimension mismatch");
    IntMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::invalid_argument, "dimension mismatch");
    IntMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix to_rational() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = Rat((*this)(i, j));
    return m;
  }

  bool is_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      int row_ones = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        const Int& x = (*this)(i, j);
        if (x == 0) continue;
        if (x != 1) return false;
        ++row_ones;
        ++col_hits[j];
      }
      if (row_ones != 1) return false;
    }
    for (int h : col_hits)
      if (h != 1) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

inline std::size_t rank(const IntMatrix& m) { return rref(m.to_rational()).rank; }

}  // namespace qlab
