#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aqg/scalar.hpp"

namespace aqg {

// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  void add_to_column(std::size_t c, const Scalar& s, const Vec& v);

  Vec apply(const Vec& v) const;  // skips zero coordinates of v
  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Solutions of M x = b: particular (absent when inconsistent) plus a nullspace basis.
// Reduction uses the leftmost nonzero pivot, so the output is deterministic.
struct AffineSolutionSet {
  std::optional<Vec> particular;
  std::vector<Vec> nullspace;
  bool consistent() const { return particular.has_value(); }
  bool unique() const { return particular.has_value() && nullspace.empty(); }
};

AffineSolutionSet solve(const Matrix& m, const Vec& b);
std::vector<Vec> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix invert(const Matrix& m);  // throws Error(Singular)
std::optional<Matrix> try_invert(const Matrix& m);

// Incrementally selects linearly independent rows; used to pick pivot rows of
// tall systems without reducing all of them.
class RowSelector {
 public:
  explicit RowSelector(std::size_t width) : width_(width) {}
  bool offer(const Vec& row);  // true when the row was independent and kept
  std::size_t rank() const { return basis_.size(); }
  bool full() const { return basis_.size() == width_; }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, Vec>> basis_;
};

std::string to_string(const Matrix& m);

}  // namespace aqg
