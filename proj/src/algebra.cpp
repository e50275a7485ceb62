#include "aqg/algebra.hpp"

#include <map>

#include "aqg/error.hpp"

namespace aqg {

Verdict compare(const Vec& lhs, const Vec& rhs, const std::string& where) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(where + ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
}

Verdict compare(const Scalar& lhs, const Scalar& rhs, const std::string& where) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(where + ": lhs=" + lhs.str() + " rhs=" + rhs.str());
}

Verdict compare(const Matrix& lhs, const Matrix& rhs, const std::string& where) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return Verdict::fail(where + ": shape mismatch");
  for (std::size_t c = 0; c < lhs.cols(); ++c)
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      if (lhs(r, c) != rhs(r, c))
        return Verdict::fail(where + " at basis " + std::to_string(c) + ": lhs=" + to_string(lhs.column(c)) +
                             " rhs=" + to_string(rhs.column(c)));
  return Verdict::pass();
}

Algebra::Algebra(std::size_t dim) : dim_(dim), table_(dim * dim) {}

Algebra Algebra::from_triples(std::size_t dim,
                              const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& sc) {
  Algebra a(dim);
  for (const auto& [i, j, k, c] : sc) a.add_structure_constant(i, j, k, c);
  return a;
}

void Algebra::add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
  auto& terms = table_[i * dim_ + j];
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->index == k) {
      it->coeff += c;
      if (it->coeff.is_zero()) terms.erase(it);
      return;
    }
    if (it->index > k) {
      if (!c.is_zero()) terms.insert(it, Term{k, c});
      return;
    }
  }
  if (!c.is_zero()) terms.push_back(Term{k, c});
}

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return {};
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error(ErrorCode::AlgebraMismatch, "multiply: wrong length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const auto& terms = product(i, j);
      if (terms.empty()) continue;
      Scalar f = a[i] * b[j];
      for (const auto& t : terms) out[t.index] += f * t.coeff;
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) m(t.index, j) += a[i] * t.coeff;
  }
  return m;
}

Matrix Algebra::right_multiplication(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(j, i)) m(t.index, j) += a[i] * t.coeff;
  }
  return m;
}

const Matrix& Algebra::star_matrix() const {
  if (!star_) throw Error(ErrorCode::NoStarStructure, "algebra has no star");
  return *star_;
}

void Algebra::set_star(Matrix star) {
  if (star.rows() != dim_ || star.cols() != dim_) throw Error(ErrorCode::DimensionMismatch, "star matrix shape");
  star_ = std::move(star);
}

Vec Algebra::star(const Vec& a) const { return apply_antilinear(star_matrix(), a); }

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t k = 0; k < a.table_.size(); ++k) {
    const auto& x = a.table_[k];
    const auto& y = b.table_[k];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
  }
  return a.star_ == b.star_;
}

Algebra tensor(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Algebra out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const auto& ta = a.product(i, j);
      if (ta.empty()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          for (const auto& x : ta)
            for (const auto& y : b.product(k, l))
              out.add_structure_constant(i * nb + k, j * nb + l, x.index * nb + y.index, x.coeff * y.coeff);
    }
  if (a.has_star() && b.has_star()) out.set_star(kron(a.star_matrix(), b.star_matrix()));
  return out;
}

Matrix flip_matrix(std::size_t dim_a, std::size_t dim_b) {
  Matrix m(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) m(j * dim_a + i, i * dim_b + j) = 1;
  return m;
}

Vec flip(const Vec& x, std::size_t dim_a, std::size_t dim_b) {
  Vec out(x.size());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) out[j * dim_a + i] = x[i * dim_b + j];
  return out;
}

Vec apply_antilinear(const Matrix& m, const Vec& x) { return m.apply(conj(x)); }

Verdict check_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ij(n), jk(n);
        for (const auto& t : a.product(i, j)) ij[t.index] = t.coeff;
        for (const auto& t : a.product(j, k)) jk[t.index] = t.coeff;
        Vec lhs = a.multiply(ij, a.basis(k));
        Vec rhs = a.multiply(a.basis(i), jk);
        if (lhs != rhs)
          return compare(lhs, rhs, "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k));
      }
  return Verdict::pass();
}

Verdict check_nondegenerate(const Algebra& a) {
  const std::size_t n = a.dim();
  // x -> (x e_j)_j and x -> (e_j x)_j must both be injective.
  RowSelector left(n), right(n);
  for (std::size_t j = 0; j < n && !left.full(); ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = a.structure_constant(i, j, k);
      left.offer(row);
    }
  for (std::size_t j = 0; j < n && !right.full(); ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = a.structure_constant(j, i, k);
      right.offer(row);
    }
  if (!left.full()) return Verdict::fail("some nonzero x has x A = 0 (rank " + std::to_string(left.rank()) + ")");
  if (!right.full()) return Verdict::fail("some nonzero x has A x = 0 (rank " + std::to_string(right.rank()) + ")");
  return Verdict::pass();
}

Verdict check_star(const Algebra& a) {
  if (!a.has_star()) return Verdict::fail("no star");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = a.basis(i);
    if (auto v = compare(a.star(a.star(e)), e, "star(star(e" + std::to_string(i) + "))"); !v) return v;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = a.star(a.multiply(a.basis(i), a.basis(j)));
      Vec rhs = a.multiply(a.star(a.basis(j)), a.star(a.basis(i)));
      if (auto v = compare(lhs, rhs, "(e" + std::to_string(i) + " e" + std::to_string(j) + ")*"); !v) return v;
    }
  return Verdict::pass();
}

Multiplier multiplier_from_element(const Algebra& a, const Vec& x) {
  return {a.left_multiplication(x), a.right_multiplication(x)};
}

Multiplier identity_multiplier(std::size_t dim) { return {Matrix::identity(dim), Matrix::identity(dim)}; }

Multiplier zero_multiplier(std::size_t dim) { return {Matrix(dim, dim), Matrix(dim, dim)}; }

Multiplier operator*(const Multiplier& a, const Multiplier& b) { return {a.left * b.left, b.right * a.right}; }

Multiplier operator+(const Multiplier& a, const Multiplier& b) { return {a.left + b.left, a.right + b.right}; }

Multiplier operator*(const Scalar& s, const Multiplier& m) { return {s * m.left, s * m.right}; }

Multiplier kron(const Multiplier& a, const Multiplier& b) { return {kron(a.left, b.left), kron(a.right, b.right)}; }

std::optional<Multiplier> inverse(const Multiplier& m) {
  auto l = try_invert(m.left);
  auto r = try_invert(m.right);
  if (!l || !r) return std::nullopt;
  return Multiplier{*l, *r};
}

Multiplier transport(const Multiplier& m, const Matrix& sigma, const Matrix& sigma_inv, bool anti) {
  // sigma(m) sigma(y) = sigma(m y) for an automorphism, sigma(y m) for an anti-automorphism.
  if (anti) return {sigma * m.right * sigma_inv, sigma * m.left * sigma_inv};
  return {sigma * m.left * sigma_inv, sigma * m.right * sigma_inv};
}

Multiplier star(const Algebra& a, const Multiplier& m) {
  // m^* x = (x^* m)^*  and  x m^* = (m x^*)^*.
  const std::size_t n = a.dim();
  Multiplier out = zero_multiplier(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec xs = a.star(a.basis(j));
    out.left.set_column(j, a.star(m.right.apply(xs)));
    out.right.set_column(j, a.star(m.left.apply(xs)));
  }
  return out;
}

Verdict check_multiplier(const Algebra& a, const Multiplier& m) {
  const std::size_t n = a.dim();
  if (m.left.rows() != n || m.left.cols() != n || m.right.rows() != n || m.right.cols() != n)
    return Verdict::fail("multiplier shape does not match algebra of dimension " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = a.basis(i), ej = a.basis(j);
      Vec eij = a.multiply(ei, ej);
      std::string tag = "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")";
      if (auto v = compare(m.left.apply(eij), a.multiply(m.left.column(i), ej), "left(xy) = left(x) y at " + tag); !v)
        return v;
      if (auto v = compare(m.right.apply(eij), a.multiply(ei, m.right.column(j)), "right(xy) = x right(y) at " + tag);
          !v)
        return v;
      if (auto v = compare(a.multiply(m.right.column(i), ej), a.multiply(ei, m.left.column(j)),
                           "right(x) y = x left(y) at " + tag);
          !v)
        return v;
    }
  return Verdict::pass();
}

Verdict compare(const Multiplier& lhs, const Multiplier& rhs, const std::string& where) {
  if (auto v = compare(lhs.left, rhs.left, where + " (left action)"); !v) return v;
  return compare(lhs.right, rhs.right, where + " (right action)");
}

std::vector<Multiplier> multiplier_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  auto lvar = [&](std::size_t p, std::size_t k) { return p * n + k; };
  auto rvar = [&](std::size_t p, std::size_t k) { return nn + p * n + k; };
  Matrix sys(3 * n * n * n, 2 * nn);
  std::size_t row = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t p = 0; p < n; ++p, ++row) {
        // L(e_x e_y) - L(e_x) e_y
        for (const auto& t : a.product(x, y)) sys(row, lvar(p, t.index)) += t.coeff;
        for (std::size_t m = 0; m < n; ++m) sys(row, lvar(m, x)) -= a.structure_constant(m, y, p);
      }
      for (std::size_t p = 0; p < n; ++p, ++row) {
        // R(e_x e_y) - e_x R(e_y)
        for (const auto& t : a.product(x, y)) sys(row, rvar(p, t.index)) += t.coeff;
        for (std::size_t m = 0; m < n; ++m) sys(row, rvar(m, y)) -= a.structure_constant(x, m, p);
      }
      for (std::size_t p = 0; p < n; ++p, ++row) {
        // R(e_x) e_y - e_x L(e_y)
        for (std::size_t m = 0; m < n; ++m) {
          sys(row, rvar(m, x)) += a.structure_constant(m, y, p);
          sys(row, lvar(m, y)) -= a.structure_constant(x, m, p);
        }
      }
    }
  std::vector<Multiplier> out;
  for (const auto& v : nullspace(sys)) {
    Multiplier m = zero_multiplier(n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t k = 0; k < n; ++k) {
        m.left(p, k) = v[lvar(p, k)];
        m.right(p, k) = v[rvar(p, k)];
      }
    out.push_back(std::move(m));
  }
  return out;
}

ElementRecovery::ElementRecovery(const Algebra& a) : algebra_(a) {
  const std::size_t n = a.dim();
  RowSelector sel(n);
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n && !sel.full(); ++j)
    for (std::size_t k = 0; k < n && !sel.full(); ++k) {
      Vec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = a.structure_constant(i, j, k);
      if (sel.offer(row)) {
        probes_.emplace_back(k, j);
        rows.push_back(std::move(row));
      }
    }
  if (!sel.full()) throw Error(ErrorCode::DegenerateAlgebra, "left multiplication is not injective");
  Matrix sub(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) sub(r, c) = rows[r][c];
  solve_ = invert(sub);
}

std::optional<Vec> ElementRecovery::from_left_action(const std::function<Vec(std::size_t)>& column) const {
  const std::size_t n = algebra_.dim();
  std::map<std::size_t, Vec> cache;
  auto col = [&](std::size_t j) -> const Vec& {
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, column(j)).first;
    return it->second;
  };
  Vec sample(n);
  for (std::size_t r = 0; r < probes_.size(); ++r) sample[r] = col(probes_[r].second)[probes_[r].first];
  Vec x = solve_.apply(sample);
  for (std::size_t j = 0; j < n; ++j)
    if (algebra_.multiply(x, algebra_.basis(j)) != col(j)) return std::nullopt;
  return x;
}

std::optional<Vec> ElementRecovery::from_multiplier(const Multiplier& m) const {
  auto x = from_left_action([&](std::size_t j) { return m.left.column(j); });
  if (!x) return std::nullopt;
  for (std::size_t j = 0; j < algebra_.dim(); ++j)
    if (algebra_.multiply(algebra_.basis(j), *x) != m.right.column(j)) return std::nullopt;
  return x;
}

Vec local_unit(const Algebra& a, const std::vector<Vec>& items) {
  const std::size_t n = a.dim();
  Matrix sys(2 * n * items.size(), n);
  Vec rhs(2 * n * items.size());
  std::size_t row = 0;
  for (const auto& x : items) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec cx = a.multiply(a.basis(i), x);
      Vec xc = a.multiply(x, a.basis(i));
      for (std::size_t p = 0; p < n; ++p) {
        sys(row + p, i) = cx[p];
        sys(row + n + p, i) = xc[p];
      }
    }
    for (std::size_t p = 0; p < n; ++p) rhs[row + p] = rhs[row + n + p] = x[p];
    row += 2 * n;
  }
  auto sol = solve(sys, rhs);
  if (!sol.particular) throw Error(ErrorCode::NoLocalUnit, "no two-sided local unit for the given elements");
  return *sol.particular;
}

Vec local_unit(const Algebra& a) {
  std::vector<Vec> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.basis(i));
  return local_unit(a, all);
}

Vec act_left(const Algebra& alg, const Vec& a, const Vec& w) {
  // (a w)(e_j) = w(e_j a)
  Vec out(alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) out[j] = dot(w, alg.multiply(alg.basis(j), a));
  return out;
}

Vec act_right(const Algebra& alg, const Vec& w, const Vec& a) {
  Vec out(alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) out[j] = dot(w, alg.multiply(a, alg.basis(j)));
  return out;
}

Matrix gram(const Algebra& a, const Vec& w) {
  const std::size_t n = a.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) g(i, j) += t.coeff * w[t.index];
  return g;
}

bool is_faithful(const Algebra& a, const Vec& w) { return try_invert(gram(a, w)).has_value(); }

}  // namespace aqg
