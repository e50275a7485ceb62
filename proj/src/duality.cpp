#include "aqg/duality.hpp"

#include <random>

#include "aqg/error.hpp"

namespace aqg {

namespace {

std::string idx(std::size_t i) { return "e" + std::to_string(i); }

Vec pair_covector(const Vec& w1, const Vec& w2) { return kron(w1, w2); }

// Delta^(w_i) from w_i(ab), as an element of the dual tensor square.
std::vector<Multiplier> comult_by_products(const QuantumGroup& g, const Algebra& dual, const Matrix& to_coords) {
  const Algebra& alg = g.algebra();
  const std::size_t n = alg.dim();
  Matrix k = kron(to_coords, to_coords);
  Algebra square = tensor(dual, dual);
  std::vector<Multiplier> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec w = dual.basis(i);
    Vec theta(n * n);
    Vec gi = phi_a(g, alg.basis(i));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) theta[a * n + b] = dot(gi, alg.multiply(alg.basis(a), alg.basis(b)));
    out.push_back(multiplier_from_element(square, k.apply(theta)));
  }
  return out;
}

// Delta^(w_i) through its actions:
//   [Delta^(w_i)(1 (x) w_l)](x (x) y) = (w_i (x) w_l)((x (x) 1)Delta(y)),
//   [(w_k (x) 1)Delta^(w_i)](x (x) y) = (w_k (x) w_i)(Delta(x)(1 (x) y)).
std::vector<Multiplier> comult_by_sandwich(const QuantumGroup& g, const Algebra& dual, const Matrix& to_coords) {
  const Algebra& alg = g.algebra();
  const std::size_t n = alg.dim();
  const std::vector<std::size_t> dims{n, n};
  Matrix k = kron(to_coords, to_coords);
  Matrix t2t = g.hopf.t.forward[1].transpose();
  Matrix t3t = g.hopf.t.forward[2].transpose();
  std::vector<Vec> gen;
  std::vector<Matrix> left_mult, right_mult;
  for (std::size_t i = 0; i < n; ++i) {
    gen.push_back(phi_a(g, alg.basis(i)));
    left_mult.push_back(dual.left_multiplication(dual.basis(i)));
    right_mult.push_back(dual.right_multiplication(dual.basis(i)));
  }
  std::vector<Multiplier> out;
  for (std::size_t i = 0; i < n; ++i) {
    Multiplier m = zero_multiplier(n * n);
    for (std::size_t l = 0; l < n; ++l) {
      Vec u = t3t.apply(pair_covector(gen[i], gen[l]));  // indexed by y * n + x
      Vec z = k.apply(flip(u, n, n));
      for (std::size_t kk = 0; kk < n; ++kk) m.left.set_column(kk * n + l, apply_on_leg(right_mult[kk], z, dims, 0));
    }
    for (std::size_t kk = 0; kk < n; ++kk) {
      Vec y = k.apply(t2t.apply(pair_covector(gen[kk], gen[i])));
      for (std::size_t l = 0; l < n; ++l) m.right.set_column(kk * n + l, apply_on_leg(left_mult[l], y, dims, 1));
    }
    out.push_back(std::move(m));
  }
  return out;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> kind(0, 3);
  Vec v(n);
  for (auto& s : v) {
    switch (kind(rng)) {
      case 0: s = Scalar(coeff(rng), coeff(rng)); break;
      case 1: s = Scalar(mpq_class(coeff(rng), 2)); break;
      default: s = Scalar(coeff(rng)); break;
    }
  }
  if (is_zero(v)) v[0] = 1;
  return v;
}

Verdict proportional(const Vec& a, const Vec& b, const std::string& where) {
  // a = lambda b with lambda nonzero
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!b[k].is_zero()) {
      Scalar lambda = a[k] / b[k];
      if (lambda.is_zero()) break;
      return compare(a, lambda * b, where + " (ratio " + lambda.str() + ")");
    }
  return Verdict::fail(where + ": zero functional");
}

}  // namespace

Vec phi_a(const QuantumGroup& g, const Vec& a) { return act_right(g.algebra(), g.phi, a); }
Vec a_phi(const QuantumGroup& g, const Vec& a) { return act_left(g.algebra(), a, g.phi); }
Vec psi_a(const QuantumGroup& g, const Vec& a) { return act_right(g.algebra(), g.psi, a); }
Vec a_psi(const QuantumGroup& g, const Vec& a) { return act_left(g.algebra(), a, g.psi); }

Vec dual_coords(const DualQG& d, const Vec& functional) { return d.to_coords.apply(functional); }
Vec dual_functional(const DualQG& d, const Vec& coords) { return d.gram.transpose().apply(coords); }

Vec convolve(const QuantumGroup& g, const Vec& t1, const Vec& t2) {
  const Algebra& alg = g.algebra();
  Vec first(alg.dim()), second(alg.dim());
  for (std::size_t x = 0; x < alg.dim(); ++x) {
    first[x] = dot(t1, slice_delta_element(g.hopf, t2, alg.basis(x), Leg::Second));
    second[x] = dot(t2, slice_delta_element(g.hopf, t1, alg.basis(x), Leg::First));
  }
  if (first != second)
    throw Error(ErrorCode::ConvolutionMismatch, "t1((i x t2)Delta(x)) = " + to_string(first) +
                                                    " but t2((t1 x i)Delta(x)) = " + to_string(second));
  return first;
}

bool mdual_member(const QuantumGroup& g, const Vec& t) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    Vec e = g.algebra().basis(a);
    if (!g.hopf.recover.from_multiplier(slice_delta(g.hopf, t, e, Leg::First))) return false;
    if (!g.hopf.recover.from_multiplier(slice_delta(g.hopf, t, e, Leg::Second))) return false;
  }
  return true;
}

Matrix dual_star_matrix(const QuantumGroup& g, const Matrix& gram, const Matrix& to_coords) {
  const Algebra& alg = g.algebra();
  const std::size_t n = alg.dim();
  Matrix star(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec gi = gram.row(i);
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = dot(gi, alg.star(g.hopf.antipode.column(j))).conj();
    star.set_column(i, to_coords.apply(w));
  }
  return star;
}

DualQG build_dual(const QuantumGroup& g) {
  const Algebra& alg = g.algebra();
  const std::size_t n = alg.dim();
  DualQG d;
  d.gram = gram(alg, g.phi);
  auto inv = try_invert(d.gram.transpose());
  if (!inv) throw Error(ErrorCode::NotFaithful, "phi is not faithful, generators are dependent");
  d.to_coords = *inv;
  Algebra dual(n);
  std::vector<Vec> gen;
  for (std::size_t i = 0; i < n; ++i) gen.push_back(phi_a(g, alg.basis(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = d.to_coords.apply(convolve(g, gen[i], gen[j]));
      for (std::size_t k = 0; k < n; ++k) dual.add_structure_constant(i, j, k, c[k]);
    }
  auto by_products = comult_by_products(g, dual, d.to_coords);
  auto by_sandwich = comult_by_sandwich(g, dual, d.to_coords);
  for (std::size_t i = 0; i < n; ++i)
    if (auto v = compare(by_sandwich[i], by_products[i], "Delta^(w" + std::to_string(i) + ")"); !v)
      throw Error(ErrorCode::DualComultMismatch, v.witness);
  if (alg.has_star()) dual.set_star(dual_star_matrix(g, d.gram, d.to_coords));
  try {
    d.qg = make_quantum_group(std::move(dual), std::move(by_sandwich));
  } catch (const Error& e) {
    throw Error(ErrorCode::DualStructureMismatch, e.what());
  }
  return d;
}

Vec dual_counit_closed(const QuantumGroup& g) { return g.phi; }

Matrix dual_antipode_closed(const QuantumGroup& g, const DualQG& d) {
  const std::size_t n = g.dim();
  Matrix out(n, n);
  Matrix st = g.hopf.antipode.transpose();
  for (std::size_t i = 0; i < n; ++i) out.set_column(i, d.to_coords.apply(st.apply(d.gram.row(i))));
  return out;
}

Vec dual_left_haar_closed(const QuantumGroup& g, const DualQG& d) {
  Matrix m = d.to_coords * gram(g.algebra(), g.psi).transpose();  // a -> coordinates of psi a
  return invert(m.transpose()).apply(g.hopf.counit);
}

Vec dual_right_haar_closed(const QuantumGroup& g, const DualQG& d) {
  Matrix m = d.to_coords * d.gram;  // a -> coordinates of a phi
  return invert(m.transpose()).apply(g.hopf.counit);
}

Matrix bidual_map(const DualQG& d, const DualQG& dd) { return dd.to_coords * d.gram; }

void run_duality_checks(const QuantumGroup& g, const DualQG& d, Report& r, std::uint64_t seed, int samples) {
  const Algebra& alg = g.algebra();
  const std::size_t n = alg.dim();
  const Algebra& dual = d.qg.algebra();
  const MultiplierHopf& s = g.hopf;
  std::mt19937_64 rng(seed);
  std::vector<Vec> thetas, omegas, elems;
  for (std::size_t j = 0; j < n; ++j) thetas.push_back(alg.basis(j));  // coordinate functionals
  for (int k = 0; k < samples; ++k) thetas.push_back(random_vec(rng, n));
  for (std::size_t i = 0; i < n; ++i) omegas.push_back(phi_a(g, alg.basis(i)));
  for (int k = 0; k < samples; ++k) omegas.push_back(random_vec(rng, n));
  for (std::size_t i = 0; i < n; ++i) elems.push_back(alg.basis(i));
  auto phihat_closed = [&] { return dual_left_haar_closed(g, d); };

  r.run("dual.generators.span", "{phi a} = {a phi} = {psi a} = {a psi} has dimension dim A", [&] {
    std::vector<std::pair<const char*, Vec (*)(const QuantumGroup&, const Vec&)>> families{
        {"phi a", phi_a}, {"a phi", a_phi}, {"psi a", psi_a}, {"a psi", a_psi}};
    for (const auto& [name, f] : families) {
      std::vector<Vec> cols;
      for (std::size_t i = 0; i < n; ++i) cols.push_back(f(g, alg.basis(i)));
      std::size_t rk = rank(Matrix::from_columns(cols, n));
      if (rk != n) return Verdict::fail(std::string(name) + " spans dimension " + std::to_string(rk));
    }
    return Verdict::pass();
  });
  r.run("dual.product.formulas", "t1((i (x) t2)Delta(x)) = t2((t1 (x) i)Delta(x))", [&] {
    for (std::size_t k = 0; k < omegas.size() && k < 2 * n; ++k)
      for (const auto& t : thetas) convolve(g, omegas[k], t);
    return Verdict::pass();
  });
  r.run("dual.algebra.associative", "(w_i w_j) w_k = w_i (w_j w_k)", [&] { return check_associative(dual); });
  r.run("dual.algebra.nondegenerate", "non-degenerate product on the dual", [&] { return check_nondegenerate(dual); });
  r.run("dual.comultiplication.routes", "Delta^(w)(a (x) b) = w(ab) agrees with the sandwich actions", [&] {
    auto by_products = comult_by_products(g, dual, d.to_coords);
    for (std::size_t i = 0; i < n; ++i)
      if (auto v = compare(d.qg.hopf.delta[i], by_products[i], "Delta^(w" + std::to_string(i) + ")"); !v) return v;
    return Verdict::pass();
  });
  r.run("dual.counit.closed", "eps^(phi a) = phi(a)",
        [&] { return compare(d.qg.hopf.counit, dual_counit_closed(g), "derived vs closed counit"); });
  r.run("dual.counit.functionals", "eps^(w a) = w(a)", [&] {
    for (std::size_t k = 0; k < omegas.size(); k += 7)
      for (std::size_t a = 0; a < n; ++a) {
        Vec wa = act_right(alg, omegas[k], alg.basis(a));
        if (auto v = compare(dot(d.qg.hopf.counit, dual_coords(d, wa)), omegas[k][a], "at " + idx(a)); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("dual.antipode.closed", "S^(w) = w o S",
        [&] { return compare(d.qg.hopf.antipode, dual_antipode_closed(g, d), "derived vs closed antipode"); });
  r.run("dual.haar.left.closed", "phi^(psi a) = eps(a) is left invariant and a multiple of the derived phi^", [&] {
    Vec closed = phihat_closed();
    if (auto v = check_left_invariance(d.qg.hopf, closed); !v) return v;
    return proportional(closed, d.qg.phi, "closed vs derived");
  });
  r.run("dual.haar.right.closed", "psi^(a phi) = eps(a) is right invariant and a multiple of the derived psi^", [&] {
    Vec closed = dual_right_haar_closed(g, d);
    if (auto v = check_right_invariance(d.qg.hopf, closed); !v) return v;
    return proportional(closed, d.qg.psi, "closed vs derived");
  });
  if (dual.has_star()) {
    r.run("dual.star", "w^*(x) = conj(w(S(x)^*)) is an involution and anti-multiplicative",
          [&] { return check_star(dual); });
    r.run("dual.star.counit", "eps^(w^*) = conj(eps^(w))", [&] {
      for (std::size_t i = 0; i < n; ++i) {
        Vec ws = dual.star(dual.basis(i));
        if (auto v = compare(dot(d.qg.hopf.counit, ws), d.qg.hopf.counit[i].conj(), "at w" + std::to_string(i)); !v)
          return v;
      }
      return Verdict::pass();
    });
  }
  r.run("lemma.slice_counit", "eps((i (x) t)Delta(a)) = eps((t (x) i)Delta(a)) = t(a)", [&] {
    for (const auto& t : thetas)
      for (std::size_t a = 0; a < n; ++a) {
        Scalar l = dot(s.counit, slice_delta_element(s, t, alg.basis(a), Leg::Second));
        Scalar m = dot(s.counit, slice_delta_element(s, t, alg.basis(a), Leg::First));
        if (auto v = compare(l, t[a], "eps((i x t)Delta(e_a)) at " + idx(a)); !v) return v;
        if (auto v = compare(m, t[a], "eps((t x i)Delta(e_a)) at " + idx(a)); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("lemma.theta_phi_a", "t (phi a) = phi S^-1((i (x) t)Delta(S(a)))", [&] {
    for (const auto& t : thetas)
      for (const auto& a : elems) {
        Vec lhs = convolve(g, t, phi_a(g, a));
        Vec b = s.antipode_inv.apply(slice_delta_element(s, t, s.antipode.apply(a), Leg::Second));
        if (auto v = compare(lhs, phi_a(g, b), "t (phi a)"); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("lemma.theta_a_phi", "t (a phi) = S((i (x) t)Delta(S^-1(a))) phi", [&] {
    for (const auto& t : thetas)
      for (const auto& a : elems) {
        Vec lhs = convolve(g, t, a_phi(g, a));
        Vec b = s.antipode.apply(slice_delta_element(s, t, s.antipode_inv.apply(a), Leg::Second));
        if (auto v = compare(lhs, a_phi(g, b), "t (a phi)"); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("lemma.psi_a_theta", "(psi a) t = psi S((t (x) i)Delta(S^-1(a)))", [&] {
    for (const auto& t : thetas)
      for (const auto& a : elems) {
        Vec lhs = convolve(g, psi_a(g, a), t);
        Vec b = s.antipode.apply(slice_delta_element(s, t, s.antipode_inv.apply(a), Leg::First));
        if (auto v = compare(lhs, psi_a(g, b), "(psi a) t"); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("lemma.a_psi_theta", "(a psi) t = S^-1((t (x) i)Delta(S(a))) psi", [&] {
    for (const auto& t : thetas)
      for (const auto& a : elems) {
        Vec lhs = convolve(g, a_psi(g, a), t);
        Vec b = s.antipode_inv.apply(slice_delta_element(s, t, s.antipode.apply(a), Leg::First));
        if (auto v = compare(lhs, a_psi(g, b), "(a psi) t"); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("lemma.dual_haar_pairing", "phi^((psi a) w) = w(S^-1(a)) with phi^(psi a) = eps(a)", [&] {
    Vec f = phihat_closed();
    for (const auto& w : thetas)
      for (std::size_t a = 0; a < n; ++a) {
        Scalar lhs = dot(f, dual_coords(d, convolve(g, psi_a(g, alg.basis(a)), w)));
        Scalar rhs = dot(w, s.antipode_inv.column(a));
        if (auto v = compare(lhs, rhs, "at " + idx(a)); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("lemma.dual_haar_twist", "phi^((psi delta S^2(b)) w) = phi^(w (psi b))", [&] {
    Vec f = phihat_closed();
    Matrix s2 = s.antipode * s.antipode;
    for (const auto& w : omegas)
      for (std::size_t b = 0; b < n; ++b) {
        Vec twisted = g.modular.left.apply(s2.column(b));
        Scalar lhs = dot(f, dual_coords(d, convolve(g, psi_a(g, twisted), w)));
        Scalar rhs = dot(f, dual_coords(d, convolve(g, w, psi_a(g, alg.basis(b)))));
        if (auto v = compare(lhs, rhs, "at " + idx(b)); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("mdual.membership", "(t (x) i)Delta(a) and (i (x) t)Delta(a) lie in A for every functional t", [&] {
    for (std::size_t k = 0; k < thetas.size(); ++k)
      if (!mdual_member(g, thetas[k])) return Verdict::fail("functional " + to_string(thetas[k]) + " is not a member");
    return Verdict::pass();
  });
  r.run("mdual.associativity", "(w1 w2)t = w1(w2 t), t(w1 w2) = (t w1)w2, (w1 t)w2 = w1(t w2)", [&] {
    std::uniform_int_distribution<std::size_t> pick(0, omegas.size() - 1);
    for (std::size_t k = 0; k < thetas.size(); ++k) {
      const Vec& t = thetas[k];
      const Vec& w1 = omegas[pick(rng)];
      const Vec& w2 = omegas[pick(rng)];
      Vec w12 = convolve(g, w1, w2);
      if (auto v = compare(convolve(g, w12, t), convolve(g, w1, convolve(g, w2, t)), "(w1 w2)t"); !v) return v;
      if (auto v = compare(convolve(g, t, w12), convolve(g, convolve(g, t, w1), w2), "t(w1 w2)"); !v) return v;
      if (auto v = compare(convolve(g, convolve(g, w1, t), w2), convolve(g, w1, convolve(g, t, w2)), "(w1 t)w2"); !v)
        return v;
    }
    return Verdict::pass();
  });
  r.run("mdual.unit", "eps t = t eps = t", [&] {
    for (const auto& t : thetas) {
      if (auto v = compare(convolve(g, s.counit, t), t, "eps t"); !v) return v;
      if (auto v = compare(convolve(g, t, s.counit), t, "t eps"); !v) return v;
    }
    return Verdict::pass();
  });
}

void run_bidual_checks(const QuantumGroup& g, const DualQG& d, const DualQG& dd, Report& r) {
  const Algebra& alg = g.algebra();
  const Algebra& bi = dd.qg.algebra();
  const std::size_t n = alg.dim();
  Matrix ups = bidual_map(d, dd);
  r.run("bidual.bijective", "x -> (w -> w(x)) is bijective", [&] {
    if (!try_invert(ups)) return Verdict::fail("evaluation map is singular: " + to_string(ups));
    return Verdict::pass();
  });
  r.run("bidual.algebra", "the evaluation map is multiplicative", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = ups.apply(alg.multiply(alg.basis(i), alg.basis(j)));
        Vec rhs = bi.multiply(ups.column(i), ups.column(j));
        if (auto v = compare(lhs, rhs, "at (" + idx(i) + ", " + idx(j) + ")"); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("bidual.comultiplication", "Delta(ev(x)) = (ev (x) ev)Delta(x)", [&] {
    auto inv = try_invert(ups);
    if (!inv) return Verdict::fail("evaluation map is singular");
    Matrix sigma = kron(ups, ups);
    Matrix sigma_inv = kron(*inv, *inv);
    for (std::size_t i = 0; i < n; ++i)
      if (auto v = compare(delta_of(dd.qg.hopf, ups.column(i)), transport(g.hopf.delta[i], sigma, sigma_inv, false),
                           "at " + idx(i));
          !v)
        return v;
    return Verdict::pass();
  });
  if (alg.has_star() && bi.has_star())
    r.run("bidual.star", "ev(x^*) = ev(x)^*", [&] {
      for (std::size_t i = 0; i < n; ++i)
        if (auto v = compare(ups.apply(alg.star(alg.basis(i))), bi.star(ups.column(i)), "at " + idx(i)); !v) return v;
      return Verdict::pass();
    });
}

}  // namespace aqg
