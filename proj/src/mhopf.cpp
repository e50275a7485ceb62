#include "aqg/mhopf.hpp"

#include "aqg/error.hpp"

namespace aqg {

namespace {

std::string idx(std::size_t i) { return "e" + std::to_string(i); }
std::string idx2(std::size_t i, std::size_t j) { return "(" + idx(i) + ", " + idx(j) + ")"; }

// Element of A (x) A equal to the product of Delta(a) with 1 (x) b, b (x) 1 on
// the appropriate side, recovered from the product's left action.
std::optional<Vec> t_map_column(const MultiplierHopf& h, int which, std::size_t a, std::size_t b) {
  const std::size_t n = h.dim();
  const std::vector<std::size_t> dims{n, n};
  const Matrix& da = h.delta[a].left;
  Matrix lb = h.algebra.left_multiplication(h.algebra.basis(b));
  auto column = [&](std::size_t j) -> Vec {
    Vec ej = unit_vec(n * n, j);
    switch (which) {
      case 0: return da.apply(apply_on_leg(lb, ej, dims, 0));
      case 1: return da.apply(apply_on_leg(lb, ej, dims, 1));
      case 2: return apply_on_leg(lb, da.column(j), dims, 0);
      default: return apply_on_leg(lb, da.column(j), dims, 1);
    }
  };
  return h.recover_square.from_left_action(column);
}

const char* t_map_name(int which) {
  static const char* names[] = {"Delta(a)(b x 1)", "Delta(a)(1 x b)", "(b x 1)Delta(a)", "(1 x b)Delta(a)"};
  return names[which];
}

const Matrix& require_inverse(const MultiplierHopf& h, int which) {
  if (!h.t.inverse[which])
    throw Error(ErrorCode::NotRegular, std::string("map a x b -> ") + t_map_name(which) + " is not bijective");
  return *h.t.inverse[which];
}

}  // namespace

bool TMaps::regular() const {
  for (const auto& f : failure)
    if (!f.empty()) return false;
  return true;
}

MultiplierHopf prepare_multiplier_hopf(Algebra a, Comultiplication delta) {
  MultiplierHopf h;
  const std::size_t n = a.dim();
  if (delta.size() != n) throw Error(ErrorCode::DimensionMismatch, "comultiplication needs one multiplier per basis element");
  for (const auto& d : delta)
    if (d.left.rows() != n * n || d.left.cols() != n * n || d.right.rows() != n * n || d.right.cols() != n * n)
      throw Error(ErrorCode::DimensionMismatch, "comultiplication multiplier has wrong shape");
  h.algebra = std::move(a);
  h.square = tensor(h.algebra, h.algebra);
  h.delta = std::move(delta);
  h.recover = ElementRecovery(h.algebra);
  h.recover_square = ElementRecovery(h.square);
  h.unit = local_unit(h.algebra);
  Vec cc = kron(h.unit, h.unit);
  h.delta_elements = Matrix(n * n, n);
  for (std::size_t i = 0; i < n; ++i) h.delta_elements.set_column(i, h.delta[i].left.apply(cc));
  for (int which = 0; which < 4; ++which) {
    Matrix m(n * n, n * n);
    std::string failure;
    for (std::size_t x = 0; x < n && failure.empty(); ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto col = t_map_column(h, which, x, y);
        if (!col) {
          failure = std::string(t_map_name(which)) + " at a=" + idx(x) + ", b=" + idx(y) + " is not in A x A";
          break;
        }
        m.set_column(x * n + y, *col);
      }
    if (failure.empty()) {
      h.t.inverse[which] = try_invert(m);
      if (!h.t.inverse[which]) failure = std::string("a x b -> ") + t_map_name(which) + " is not injective";
    }
    h.t.forward[which] = std::move(m);
    h.t.failure[which] = std::move(failure);
  }
  return h;
}

MultiplierHopf make_multiplier_hopf(Algebra a, Comultiplication delta) {
  MultiplierHopf h = prepare_multiplier_hopf(std::move(a), std::move(delta));
  auto require = [](const Verdict& v, ErrorCode code) {
    if (!v) throw Error(code, v.witness);
  };
  require(check_delta_multipliers(h), ErrorCode::NotComultiplication);
  require(check_delta_homomorphism(h), ErrorCode::NotComultiplication);
  for (int k = 0; k < 4; ++k) require(check_t_map(h, k), ErrorCode::NotRegular);
  require(check_coassociativity(h), ErrorCode::NotComultiplication);
  h.counit = derive_counit(h);
  auto [s, s_inv] = derive_antipode(h);
  h.antipode = std::move(s);
  h.antipode_inv = std::move(s_inv);
  require(check_antipode_antimultiplicative(h), ErrorCode::NoAntipode);
  require(check_antipode_comultiplication(h), ErrorCode::NoAntipode);
  return h;
}

Verdict check_delta_multipliers(const MultiplierHopf& h) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (auto v = check_multiplier(h.square, h.delta[i]); !v) return Verdict::fail("Delta(" + idx(i) + "): " + v.witness);
  return Verdict::pass();
}

Verdict check_delta_homomorphism(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Multiplier lhs = h.delta[i] * h.delta[j];
      Multiplier rhs = zero_multiplier(n * n);
      for (const auto& t : h.algebra.product(i, j)) rhs = rhs + t.coeff * h.delta[t.index];
      if (auto v = compare(lhs, rhs, "Delta(e_i)Delta(e_j) = Delta(e_i e_j) at " + idx2(i, j)); !v) return v;
    }
  return Verdict::pass();
}

Verdict check_delta_star(const MultiplierHopf& h) {
  if (!h.algebra.has_star()) return Verdict::fail("no star");
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Multiplier lhs = delta_of(h, h.algebra.star(h.algebra.basis(i)));
    Multiplier rhs = star(h.square, h.delta[i]);
    if (auto v = compare(lhs, rhs, "Delta(e_i^*) = Delta(e_i)^* at " + idx(i)); !v) return v;
  }
  return Verdict::pass();
}

Verdict check_t_map(const MultiplierHopf& h, int index) {
  if (h.t.failure[index].empty()) return Verdict::pass();
  return Verdict::fail(h.t.failure[index]);
}

Verdict check_coassociativity(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Multiplier lhs = comultiply_first_leg(h, h.delta[a], n);
    Multiplier rhs = comultiply_last_leg(h, h.delta[a], n);
    if (auto v = compare(lhs, rhs, "(Delta x i)Delta(" + idx(a) + ") = (i x Delta)Delta(" + idx(a) + ")"); !v) return v;
  }
  return Verdict::pass();
}

Vec derive_counit(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  const Matrix& t1 = h.t.forward[0];
  const Matrix& t2 = h.t.forward[1];
  Matrix sys(2 * n * n * n, n);
  Vec rhs(2 * n * n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec ab = h.algebra.multiply(h.algebra.basis(a), h.algebra.basis(b));
      std::size_t col = a * n + b;
      for (std::size_t l = 0; l < n; ++l, ++row) {
        // (eps (x) i)(Delta(a)(1 (x) b)) = ab
        for (std::size_t k = 0; k < n; ++k) sys(row, k) = t2(k * n + l, col);
        rhs[row] = ab[l];
      }
      for (std::size_t k = 0; k < n; ++k, ++row) {
        // (i (x) eps)(Delta(a)(b (x) 1)) = ab
        for (std::size_t l = 0; l < n; ++l) sys(row, l) = t1(k * n + l, col);
        rhs[row] = ab[k];
      }
    }
  auto sol = solve(sys, rhs);
  if (!sol.particular) throw Error(ErrorCode::NoCounit, "counit equations are inconsistent");
  if (!sol.nullspace.empty())
    throw Error(ErrorCode::NoCounit, "counit equations leave " + std::to_string(sol.nullspace.size()) + " free parameters");
  if (is_zero(*sol.particular)) throw Error(ErrorCode::NoCounit, "counit is zero");
  return *sol.particular;
}

std::pair<Matrix, Matrix> derive_antipode(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  if (h.counit.size() != n) throw Error(ErrorCode::NoAntipode, "counit not derived");
  const Matrix& t2 = h.t.forward[1];
  const Matrix& t3 = h.t.forward[2];
  auto var = [n](std::size_t m, std::size_t k) { return m * n + k; };  // coefficient of e_m in S(e_k)
  Matrix sys(2 * n * n * n, n * n);
  Vec rhs(2 * n * n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t col = a * n + b;
      // m(S (x) i)(Delta(a)(1 (x) b)) = eps(a) b
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& t = t2(k * n + l, col);
          if (t.is_zero()) continue;
          for (std::size_t m = 0; m < n; ++m)
            for (const auto& term : h.algebra.product(m, l)) sys(row + term.index, var(m, k)) += t * term.coeff;
        }
      rhs[row + b] += h.counit[a];
      row += n;
      // m(i (x) S)((b (x) 1)Delta(a)) = eps(a) b
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& t = t3(k * n + l, col);
          if (t.is_zero()) continue;
          for (std::size_t m = 0; m < n; ++m)
            for (const auto& term : h.algebra.product(k, m)) sys(row + term.index, var(m, l)) += t * term.coeff;
        }
      rhs[row + b] += h.counit[a];
      row += n;
    }
  auto sol = solve(sys, rhs);
  if (!sol.particular) throw Error(ErrorCode::NoAntipode, "antipode equations are inconsistent");
  if (!sol.nullspace.empty()) throw Error(ErrorCode::NoAntipode, "antipode equations are underdetermined");
  Matrix s(n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) s(m, k) = (*sol.particular)[var(m, k)];
  auto inv = try_invert(s);
  if (!inv) throw Error(ErrorCode::NoAntipode, "antipode is not bijective");
  return {s, *inv};
}

Verdict check_counit_laws(const MultiplierHopf& h) {
  for (std::size_t a = 0; a < h.dim(); ++a) {
    Multiplier expect = multiplier_from_element(h.algebra, h.algebra.basis(a));
    if (auto v = compare(slice_delta(h, h.counit, h.algebra.basis(a), Leg::First), expect,
                         "(eps x i)Delta(" + idx(a) + ") = " + idx(a));
        !v)
      return v;
    if (auto v = compare(slice_delta(h, h.counit, h.algebra.basis(a), Leg::Second), expect,
                         "(i x eps)Delta(" + idx(a) + ") = " + idx(a));
        !v)
      return v;
  }
  return Verdict::pass();
}

Verdict check_counit_multiplicative(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar lhs = dot(h.counit, h.algebra.multiply(h.algebra.basis(a), h.algebra.basis(b)));
      if (auto v = compare(lhs, h.counit[a] * h.counit[b], "eps(e_a e_b) = eps(e_a) eps(e_b) at " + idx2(a, b)); !v)
        return v;
    }
  return Verdict::pass();
}

Verdict check_antipode_laws(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec expect = h.counit[a] * h.algebra.basis(b);
      Vec left(n), right(n);
      Vec t2 = h.t.forward[1].column(a * n + b);
      Vec t3 = h.t.forward[2].column(a * n + b);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (!t2[k * n + l].is_zero())
            axpy(left, t2[k * n + l], h.algebra.multiply(h.antipode.column(k), h.algebra.basis(l)));
          if (!t3[k * n + l].is_zero())
            axpy(right, t3[k * n + l], h.algebra.multiply(h.algebra.basis(k), h.antipode.column(l)));
        }
      if (auto v = compare(left, expect, "m(S x i)(Delta(a)(1 x b)) = eps(a) b at " + idx2(a, b)); !v) return v;
      if (auto v = compare(right, expect, "m(i x S)((b x 1)Delta(a)) = eps(a) b at " + idx2(a, b)); !v) return v;
    }
  return Verdict::pass();
}

Verdict check_antipode_antimultiplicative(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec lhs = h.antipode.apply(h.algebra.multiply(h.algebra.basis(a), h.algebra.basis(b)));
      Vec rhs = h.algebra.multiply(h.antipode.column(b), h.antipode.column(a));
      if (auto v = compare(lhs, rhs, "S(e_a e_b) = S(e_b) S(e_a) at " + idx2(a, b)); !v) return v;
    }
  return Verdict::pass();
}

Verdict check_antipode_comultiplication(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  Matrix ss = kron(h.antipode, h.antipode);
  Matrix ss_inv = kron(h.antipode_inv, h.antipode_inv);
  Matrix chi = flip_matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    Multiplier lhs = transport(transport(h.delta[a], ss, ss_inv, true), chi, chi, false);
    Multiplier rhs = delta_of(h, h.antipode.column(a));
    if (auto v = compare(lhs, rhs, "flip (S x S)Delta(" + idx(a) + ") = Delta(S(" + idx(a) + "))"); !v) return v;
  }
  return Verdict::pass();
}

Multiplier delta_of(const MultiplierHopf& h, const Vec& a) {
  if (a.size() != h.dim()) throw Error(ErrorCode::AlgebraMismatch, "delta_of: wrong length");
  Multiplier out = zero_multiplier(h.dim() * h.dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out = out + a[i] * h.delta[i];
  return out;
}

Multiplier extend_delta(const MultiplierHopf& h, const Multiplier& m) {
  // Delta(m) Delta(a)(1 (x) b) = Delta(ma)(1 (x) b); (1 (x) b)Delta(a) Delta(m) = (1 (x) b)Delta(am).
  const std::size_t n = h.dim();
  Matrix id = Matrix::identity(n);
  return {h.t.forward[1] * kron(m.left, id) * require_inverse(h, 1),
          h.t.forward[3] * kron(m.right, id) * require_inverse(h, 3)};
}

Scalar extend_counit(const MultiplierHopf& h, const Multiplier& m) {
  for (std::size_t k = 0; k < h.dim(); ++k)
    if (!h.counit[k].is_zero()) return dot(h.counit, m.left.column(k)) / h.counit[k];
  throw Error(ErrorCode::NoCounit, "counit is zero");
}

Multiplier extend_antipode(const MultiplierHopf& h, const Multiplier& m) {
  return transport(m, h.antipode, h.antipode_inv, true);
}

Vec contract_first(const Vec& w, const Vec& z, std::size_t dim_rest) {
  Vec out(dim_rest);
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (w[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_rest; ++b)
      if (!z[a * dim_rest + b].is_zero()) out[b] += w[a] * z[a * dim_rest + b];
  }
  return out;
}

Vec contract_second(const Vec& z, const Vec& w, std::size_t dim_first) {
  Vec out(dim_first);
  const std::size_t nb = w.size();
  for (std::size_t a = 0; a < dim_first; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (!w[b].is_zero() && !z[a * nb + b].is_zero()) out[a] += z[a * nb + b] * w[b];
  return out;
}

Multiplier slice_delta(const MultiplierHopf& h, const Vec& w, const Vec& a, Leg leg) {
  const std::size_t n = h.dim();
  Multiplier out = zero_multiplier(n);
  const Matrix& tl = h.t.forward[leg == Leg::First ? 1 : 0];
  const Matrix& tr = h.t.forward[leg == Leg::First ? 3 : 2];
  for (std::size_t b = 0; b < n; ++b) {
    Vec ab = kron(a, unit_vec(n, b));
    Vec zl = tl.apply(ab);
    Vec zr = tr.apply(ab);
    if (leg == Leg::First) {
      out.left.set_column(b, contract_first(w, zl, n));
      out.right.set_column(b, contract_first(w, zr, n));
    } else {
      out.left.set_column(b, contract_second(zl, w, n));
      out.right.set_column(b, contract_second(zr, w, n));
    }
  }
  return out;
}

Vec slice_delta_element(const MultiplierHopf& h, const Vec& w, const Vec& a, Leg leg) {
  // Finite dimension: the local unit is a unit, so Delta(a) is the element Delta(a)(c (x) c).
  Vec z = h.delta_elements.apply(a);
  return leg == Leg::First ? contract_first(w, z, h.dim()) : contract_second(z, w, h.dim());
}

Multiplier comultiply_first_leg(const MultiplierHopf& h, const Multiplier& v, std::size_t nb) {
  // (Delta x i)(V)(Delta(a)(1 x b) x c) = (Delta x i)(V(a x c))(1 x b x 1), and on the right
  // ((1 x b)Delta(a) x c)(Delta x i)(V) = (1 x b x 1)(Delta x i)((a x c)V).
  const std::size_t n = h.dim();
  const std::size_t nn = n * n;
  if (v.dim() != n * nb) throw Error(ErrorCode::DimensionMismatch, "comultiply_first_leg: multiplier shape");
  const Matrix& t2 = h.t.forward[1];
  const Matrix& t4 = h.t.forward[3];
  const Matrix& t2_inv = require_inverse(h, 1);
  const Matrix& t4_inv = require_inverse(h, 3);
  Multiplier out = zero_multiplier(nn * nb);
  auto fill = [&](Matrix& target, const Matrix& action, const Matrix& t, const Matrix& t_inv) {
    for (std::size_t pq = 0; pq < nn; ++pq) {
      Vec w = t_inv.column(pq);
      for (std::size_t c = 0; c < nb; ++c) {
        Vec col(nn * nb);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const Scalar& wij = w[i * n + j];
            if (wij.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t l = 0; l < nb; ++l) {
                const Scalar& vkl = action(k * nb + l, i * nb + c);
                if (vkl.is_zero()) continue;
                Scalar f = wij * vkl;
                for (std::size_t st = 0; st < nn; ++st) {
                  const Scalar& x = t(st, k * n + j);
                  if (!x.is_zero()) col[st * nb + l] += f * x;
                }
              }
          }
        target.set_column(pq * nb + c, col);
      }
    }
  };
  fill(out.left, v.left, t2, t2_inv);
  fill(out.right, v.right, t4, t4_inv);
  return out;
}

Multiplier comultiply_last_leg(const MultiplierHopf& h, const Multiplier& w, std::size_t nb) {
  // (i x Delta)(W)(c x Delta(a)(b x 1)) = (i x Delta)(W(c x a))(1 x b x 1), and on the right
  // (c x (b x 1)Delta(a))(i x Delta)(W) = (1 x b x 1)(i x Delta)((c x a)W).
  const std::size_t n = h.dim();
  const std::size_t nn = n * n;
  if (w.dim() != n * nb) throw Error(ErrorCode::DimensionMismatch, "comultiply_last_leg: multiplier shape");
  const Matrix& t1 = h.t.forward[0];
  const Matrix& t3 = h.t.forward[2];
  const Matrix& t1_inv = require_inverse(h, 0);
  const Matrix& t3_inv = require_inverse(h, 2);
  Multiplier out = zero_multiplier(nn * nb);
  auto fill = [&](Matrix& target, const Matrix& action, const Matrix& t, const Matrix& t_inv) {
    for (std::size_t pq = 0; pq < nn; ++pq) {
      Vec coeffs = t_inv.column(pq);
      for (std::size_t c = 0; c < nb; ++c) {
        Vec col(nb * nn);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const Scalar& wij = coeffs[i * n + j];
            if (wij.is_zero()) continue;
            for (std::size_t k = 0; k < nb; ++k)
              for (std::size_t l = 0; l < n; ++l) {
                const Scalar& vkl = action(k * n + l, c * n + i);
                if (vkl.is_zero()) continue;
                Scalar f = wij * vkl;
                for (std::size_t st = 0; st < nn; ++st) {
                  const Scalar& x = t(st, l * n + j);
                  if (!x.is_zero()) col[k * nn + st] += f * x;
                }
              }
          }
        target.set_column(c * nn + pq, col);
      }
    }
  };
  fill(out.left, w.left, t1, t1_inv);
  fill(out.right, w.right, t3, t3_inv);
  return out;
}

Vec apply_on_leg(const Matrix& m, const Vec& x, const std::vector<std::size_t>& dims, std::size_t leg) {
  std::size_t inner = 1;
  for (std::size_t k = leg + 1; k < dims.size(); ++k) inner *= dims[k];
  const std::size_t d = dims[leg];
  Vec out(x.size());
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx].is_zero()) continue;
    std::size_t outer = idx / (inner * d);
    std::size_t mid = (idx / inner) % d;
    std::size_t low = idx % inner;
    for (std::size_t r = 0; r < d; ++r) {
      const Scalar& e = m(r, mid);
      if (!e.is_zero()) out[(outer * d + r) * inner + low] += e * x[idx];
    }
  }
  return out;
}

Multiplier leg_embed(const Multiplier& m, const std::array<std::size_t, 3>& dims, std::size_t skip) {
  std::array<std::size_t, 2> kept{};
  for (std::size_t k = 0, p = 0; k < 3; ++k)
    if (k != skip) kept[p++] = k;
  const std::size_t db = dims[kept[1]];
  const std::size_t total = dims[0] * dims[1] * dims[2];
  if (m.dim() != dims[kept[0]] * db) throw Error(ErrorCode::DimensionMismatch, "leg_embed: multiplier shape");
  auto embed = [&](const Matrix& src) {
    Matrix out(total, total);
    for (std::size_t i0 = 0; i0 < dims[0]; ++i0)
      for (std::size_t i1 = 0; i1 < dims[1]; ++i1)
        for (std::size_t i2 = 0; i2 < dims[2]; ++i2) {
          std::array<std::size_t, 3> in{i0, i1, i2};
          std::size_t col_in = in[kept[0]] * db + in[kept[1]];
          std::size_t col_out = (i0 * dims[1] + i1) * dims[2] + i2;
          for (std::size_t r = 0; r < src.rows(); ++r) {
            const Scalar& e = src(r, col_in);
            if (e.is_zero()) continue;
            std::array<std::size_t, 3> o = in;
            o[kept[0]] = r / db;
            o[kept[1]] = r % db;
            out((o[0] * dims[1] + o[1]) * dims[2] + o[2], col_out) = e;
          }
        }
    return out;
  };
  return {embed(m.left), embed(m.right)};
}

}  // namespace aqg
