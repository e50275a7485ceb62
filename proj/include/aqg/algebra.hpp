#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "aqg/linalg.hpp"

namespace aqg {

struct Term {
  std::size_t index;
  Scalar coeff;
};

// Outcome of a mathematical check: failures carry a witness naming basis
// indices and the two unequal values.
struct Verdict {
  bool ok = true;
  std::string witness;
  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

Verdict compare(const Vec& lhs, const Vec& rhs, const std::string& where);
Verdict compare(const Scalar& lhs, const Scalar& rhs, const std::string& where);
Verdict compare(const Matrix& lhs, const Matrix& rhs, const std::string& where);

// Finite-dimensional algebra over Q(i) with sparse structure constants
// e_i e_j = sum_k c_ij^k e_k and an optional conjugate-linear star,
// e_j^* = sum_i star(i, j) e_i.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim);
  static Algebra from_triples(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& sc);

  std::size_t dim() const { return dim_; }
  void add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basis(std::size_t i) const { return unit_vec(dim_, i); }
  Matrix left_multiplication(const Vec& a) const;   // column j = a e_j
  Matrix right_multiplication(const Vec& a) const;  // column j = e_j a

  bool has_star() const { return star_.has_value(); }
  const Matrix& star_matrix() const;
  void set_star(Matrix star);
  void clear_star() { star_.reset(); }
  Vec star(const Vec& a) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Term>> table_;
  std::optional<Matrix> star_;
};

// Basis of A (x) B is e_a (x) f_b at index a * dim(B) + b.
Algebra tensor(const Algebra& a, const Algebra& b);
Matrix flip_matrix(std::size_t dim_a, std::size_t dim_b);  // A (x) B -> B (x) A
Vec flip(const Vec& x, std::size_t dim_a, std::size_t dim_b);

// Conjugate-linear matrix action: x -> sum conj(x_j) column_j.
Vec apply_antilinear(const Matrix& m, const Vec& x);

Verdict check_associative(const Algebra& a);
Verdict check_nondegenerate(const Algebra& a);
Verdict check_star(const Algebra& a);  // involutive, anti-multiplicative

// Multiplier as its pair of actions: left(x) = m x, right(x) = x m.
struct Multiplier {
  Matrix left;
  Matrix right;
  std::size_t dim() const { return left.rows(); }
  friend bool operator==(const Multiplier& a, const Multiplier& b) = default;
};

Multiplier multiplier_from_element(const Algebra& a, const Vec& x);
Multiplier identity_multiplier(std::size_t dim);
Multiplier zero_multiplier(std::size_t dim);
Multiplier operator*(const Multiplier& a, const Multiplier& b);
Multiplier operator+(const Multiplier& a, const Multiplier& b);
Multiplier operator*(const Scalar& s, const Multiplier& m);
Multiplier kron(const Multiplier& a, const Multiplier& b);
std::optional<Multiplier> inverse(const Multiplier& m);
// Image under an automorphism (anti = false) or anti-automorphism (anti = true) sigma.
Multiplier transport(const Multiplier& m, const Matrix& sigma, const Matrix& sigma_inv, bool anti);
Multiplier star(const Algebra& a, const Multiplier& m);
Verdict check_multiplier(const Algebra& a, const Multiplier& m);
Verdict compare(const Multiplier& lhs, const Multiplier& rhs, const std::string& where);

// Basis of M(A) from the module-map and compatibility constraints.
std::vector<Multiplier> multiplier_algebra(const Algebra& a);

// Recovers x in A from its left action, using a fixed set of independent
// coordinates of the map x -> (x e_j)_j. The answer is checked against
// every column, so a map that is not left multiplication by an element
// yields nullopt.
class ElementRecovery {
 public:
  ElementRecovery() = default;
  explicit ElementRecovery(const Algebra& a);
  std::optional<Vec> from_left_action(const std::function<Vec(std::size_t)>& column) const;
  std::optional<Vec> from_multiplier(const Multiplier& m) const;
  const Algebra& algebra() const { return algebra_; }

 private:
  Algebra algebra_;
  std::vector<std::pair<std::size_t, std::size_t>> probes_;  // (coordinate k, basis j)
  Matrix solve_;
};

// c with c x = x c = x for every listed x; throws Error(NoLocalUnit).
Vec local_unit(const Algebra& a, const std::vector<Vec>& items);
Vec local_unit(const Algebra& a);

// Functional actions: (a w)(x) = w(x a), (w a)(x) = w(a x).
Vec act_left(const Algebra& alg, const Vec& a, const Vec& w);
Vec act_right(const Algebra& alg, const Vec& w, const Vec& a);
Matrix gram(const Algebra& a, const Vec& w);  // (i, j) -> w(e_i e_j)
bool is_faithful(const Algebra& a, const Vec& w);

}  // namespace aqg
