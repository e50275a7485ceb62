#include "aqg/linalg.hpp"

#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "set_column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::add_to_column(std::size_t c, const Scalar& s, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "add_to_column");
  if (s.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!v[r].is_zero()) (*this)(r, c) += s * v[r];
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix apply");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = s.conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.data_.size(); ++k)
    if (!m.data_[k].is_zero()) out.data_[k] = s * m.data_[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

namespace {

// Reduced row echelon form of [m | rhs...] in place; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    if (found == m.rows()) continue;
    if (found != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vec> nullspace_from_rref(const Matrix& r, const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

AffineSolutionSet solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = reduce(aug, n);
  AffineSolutionSet out;
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, n).is_zero()) {
      out.nullspace = nullspace_from_rref(aug, pivots, n);
      return out;
    }
  Vec x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, n);
  out.particular = std::move(x);
  out.nullspace = nullspace_from_rref(aug, pivots, n);
  return out;
}

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = reduce(r, m.cols());
  return nullspace_from_rref(r, pivots, m.cols());
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return reduce(r, m.cols()).size();
}

std::optional<Matrix> try_invert(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "invert: not square");
  auto inv = try_invert(m);
  if (!inv) throw Error(ErrorCode::Singular, "matrix of size " + std::to_string(m.rows()) + " is singular");
  return *inv;
}

bool RowSelector::offer(const Vec& row) {
  if (row.size() != width_) throw Error(ErrorCode::DimensionMismatch, "RowSelector::offer");
  if (full()) return false;
  Vec v = row;
  for (const auto& [pivot, b] : basis_) {
    if (v[pivot].is_zero()) continue;
    Scalar f = v[pivot];
    for (std::size_t c = 0; c < width_; ++c)
      if (!b[c].is_zero()) v[c] -= f * b[c];
  }
  for (std::size_t c = 0; c < width_; ++c) {
    if (v[c].is_zero()) continue;
    Scalar inv = v[c].inverse();
    for (auto& s : v) s *= inv;
    basis_.emplace_back(c, std::move(v));
    return true;
  }
  return false;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? ", " : "") << to_string(m.row(r));
  os << "]";
  return os.str();
}

}  // namespace aqg
