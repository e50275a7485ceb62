#include "aqg/haar.hpp"

#include "aqg/error.hpp"

namespace aqg {

namespace {

std::string idx(std::size_t i) { return "e" + std::to_string(i); }
std::string idx2(std::size_t i, std::size_t j) { return "(" + idx(i) + ", " + idx(j) + ")"; }

Vec bar(const Algebra& a, const Vec& w) {
  // wbar(x) = conj(w(x^*))
  Vec out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out[j] = dot(w, a.star(a.basis(j))).conj();
  return out;
}

Vec normalize_first(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return s.inverse() * v;
  return v;
}

// Keeps w self-adjoint: divides by a real number only.
Vec normalize_real(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) {
      Scalar r = sgn(s.re()) != 0 ? Scalar(s.re()) : Scalar(s.im());
      return r.inverse() * v;
    }
  return v;
}

// (w (x) i) or (i (x) w) of the given T-map column.
Vec slice_t(const MultiplierHopf& h, int which, std::size_t a, std::size_t b, const Vec& w, Leg leg) {
  const std::size_t n = h.dim();
  Vec z = h.t.forward[which].column(a * n + b);
  return leg == Leg::First ? contract_first(w, z, n) : contract_second(z, w, n);
}

}  // namespace

Vec solve_left_haar(const MultiplierHopf& h) {
  const std::size_t n = h.dim();
  const Matrix& t1 = h.t.forward[0];
  // (i (x) phi)(Delta(a)(b (x) 1)) - phi(a) b = 0 for every a, b.
  Matrix sys(n * n * n, n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t l = 0; l < n; ++l) sys(row, l) = t1(k * n + l, a * n + b);
        if (k == b) sys(row, a) -= 1;
      }
  auto basis = nullspace(sys);
  if (basis.empty()) throw Error(ErrorCode::NoHaar, "only the zero functional is left invariant");
  if (basis.size() > 1)
    throw Error(ErrorCode::NonUniqueHaar, "left invariant functionals form a space of dimension " + std::to_string(basis.size()));
  Vec phi = normalize_first(basis.front());
  const Algebra& alg = h.algebra;
  if (alg.has_star()) {
    Vec phibar = bar(alg, phi);
    if (phibar != phi) {
      Vec sum = phi + phibar;
      Vec candidate = is_zero(sum) ? Scalar(0, mpq_class(-1, 2)) * (phi - phibar) : Scalar(mpq_class(1, 2)) * sum;
      phi = normalize_real(candidate);
    }
  }
  return phi;
}

Vec right_haar(const MultiplierHopf& h, const Vec& phi) { return h.antipode.transpose().apply(phi); }

Matrix modular_automorphism(const Algebra& a, const Vec& w) {
  Matrix g = gram(a, w);
  auto g_inv = try_invert(g);
  if (!g_inv) throw Error(ErrorCode::NotFaithful, "functional is not faithful");
  // w(e_i e_j) = w(e_j sigma(e_i))  <=>  G^T = G sigma
  return *g_inv * g.transpose();
}

std::pair<Multiplier, Multiplier> modular_element(const MultiplierHopf& h, const Vec& phi) {
  const std::size_t n = h.dim();
  std::size_t pivot = n;
  for (std::size_t a = 0; a < n; ++a)
    if (!phi[a].is_zero()) {
      pivot = a;
      break;
    }
  if (pivot == n) throw Error(ErrorCode::NoModularElement, "phi is zero");
  Multiplier d = zero_multiplier(n);
  for (std::size_t b = 0; b < n; ++b)
    d.left.set_column(b, phi[pivot].inverse() * slice_t(h, 1, pivot, b, phi, Leg::First));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec lhs = slice_t(h, 1, a, b, phi, Leg::First);
      if (lhs != phi[a] * d.left.column(b))
        throw Error(ErrorCode::NoModularElement,
                    "(phi x i)(Delta(a)(1 x b)) is not phi(a) times a fixed map at " + idx2(a, b));
    }
  for (std::size_t a = 0; a < n; ++a) {
    auto x = h.recover.from_left_action(
        [&](std::size_t b) { return h.algebra.multiply(h.algebra.basis(a), d.left.column(b)); });
    if (!x) throw Error(ErrorCode::NoModularElement, "a delta is not in A for a = " + idx(a));
    d.right.set_column(a, *x);
  }
  if (auto v = check_multiplier(h.algebra, d); !v) throw Error(ErrorCode::NoModularElement, v.witness);
  auto inv = inverse(d);
  if (!inv) throw Error(ErrorCode::NotInvertible, "modular element is not invertible");
  return {d, *inv};
}

Scalar scaling_constant(const MultiplierHopf& h, const Vec& phi) {
  Vec phi_s2 = (h.antipode * h.antipode).transpose().apply(phi);
  for (std::size_t k = 0; k < phi.size(); ++k)
    if (!phi[k].is_zero()) {
      Scalar mu = phi_s2[k] / phi[k];
      if (phi_s2 != mu * phi) throw Error(ErrorCode::NotProportional, "phi o S^2 is not a multiple of phi");
      return mu;
    }
  throw Error(ErrorCode::NotProportional, "phi is zero");
}

QuantumGroup make_quantum_group(MultiplierHopf h) {
  QuantumGroup g;
  g.hopf = std::move(h);
  g.phi = solve_left_haar(g.hopf);
  if (auto v = check_faithful(g.hopf.algebra, g.phi, "phi"); !v) throw Error(ErrorCode::NotFaithful, v.witness);
  g.psi = right_haar(g.hopf, g.phi);
  g.rho = modular_automorphism(g.hopf.algebra, g.phi);
  g.rho_prime = modular_automorphism(g.hopf.algebra, g.psi);
  auto [d, d_inv] = modular_element(g.hopf, g.phi);
  g.modular = std::move(d);
  g.modular_inv = std::move(d_inv);
  g.mu = scaling_constant(g.hopf, g.phi);
  return g;
}

QuantumGroup make_quantum_group(Algebra a, Comultiplication delta) {
  return make_quantum_group(make_multiplier_hopf(std::move(a), std::move(delta)));
}

Verdict check_left_invariance(const MultiplierHopf& h, const Vec& phi) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Multiplier lhs = slice_delta(h, phi, h.algebra.basis(a), Leg::Second);
    if (auto v = compare(lhs, phi[a] * identity_multiplier(n), "(i x phi)Delta(" + idx(a) + ") = phi(" + idx(a) + ")1");
        !v)
      return v;
  }
  return Verdict::pass();
}

Verdict check_right_invariance(const MultiplierHopf& h, const Vec& psi) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Multiplier lhs = slice_delta(h, psi, h.algebra.basis(a), Leg::First);
    if (auto v = compare(lhs, psi[a] * identity_multiplier(n), "(psi x i)Delta(" + idx(a) + ") = psi(" + idx(a) + ")1");
        !v)
      return v;
  }
  return Verdict::pass();
}

Verdict check_faithful(const Algebra& a, const Vec& w, const std::string& name) {
  Matrix g = gram(a, w);
  auto null = nullspace(g);
  if (null.empty()) return Verdict::pass();
  return Verdict::fail(name + "(x b) = 0 for all b at x = " + to_string(null.front()));
}

Verdict check_kms(const Algebra& a, const Vec& w, const Matrix& sigma, const std::string& name) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar lhs = dot(w, a.multiply(a.basis(i), a.basis(j)));
      Scalar rhs = dot(w, a.multiply(a.basis(j), sigma.column(i)));
      if (auto v = compare(lhs, rhs, name + " at " + idx2(i, j)); !v) return v;
    }
  return Verdict::pass();
}

Verdict check_automorphism(const Algebra& a, const Matrix& sigma, const std::string& name) {
  const std::size_t n = a.dim();
  if (!try_invert(sigma)) return Verdict::fail(name + " is not bijective");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = sigma.apply(a.multiply(a.basis(i), a.basis(j)));
      Vec rhs = a.multiply(sigma.column(i), sigma.column(j));
      if (auto v = compare(lhs, rhs, name + "(e_i e_j) = " + name + "(e_i)" + name + "(e_j) at " + idx2(i, j)); !v)
        return v;
    }
  return Verdict::pass();
}

Verdict check_self_adjoint(const Algebra& a, const Vec& w, const std::string& name) {
  if (!a.has_star()) return Verdict::fail("no star");
  return compare(bar(a, w), w, name + "(x^*) = conj(" + name + "(x))");
}

void run_modular_checks(const QuantumGroup& g, Report& r) {
  const MultiplierHopf& h = g.hopf;
  const Algebra& alg = h.algebra;
  const std::size_t n = h.dim();
  const Matrix& s = h.antipode;
  const Matrix& s_inv = h.antipode_inv;
  const Matrix s2 = s * s;
  const Matrix s2_inv = s_inv * s_inv;
  const Multiplier& d = g.modular;
  const Multiplier& d_inv = g.modular_inv;

  r.run("haar.left.invariant", "(i (x) phi)Delta(a) = phi(a)1", [&] { return check_left_invariance(h, g.phi); });
  r.run("haar.left.faithful", "phi(ab) = 0 for all b implies a = 0", [&] { return check_faithful(alg, g.phi, "phi"); });
  if (alg.has_star())
    r.run("haar.left.self_adjoint", "phi(a^*) = conj(phi(a))", [&] { return check_self_adjoint(alg, g.phi, "phi"); });
  r.run("haar.right.invariant", "(psi (x) i)Delta(a) = psi(a)1 with psi = phi o S",
        [&] { return check_right_invariance(h, g.psi); });
  r.run("haar.right.faithful", "psi(ab) = 0 for all b implies a = 0", [&] { return check_faithful(alg, g.psi, "psi"); });
  r.run("modular.rho.kms", "phi(ab) = phi(b rho(a))", [&] { return check_kms(alg, g.phi, g.rho, "phi(ab) = phi(b rho(a))"); });
  r.run("modular.rho.automorphism", "rho(ab) = rho(a)rho(b)", [&] { return check_automorphism(alg, g.rho, "rho"); });
  r.run("modular.rho_prime.kms", "psi(ab) = psi(b rho'(a))",
        [&] { return check_kms(alg, g.psi, g.rho_prime, "psi(ab) = psi(b rho'(a))"); });
  r.run("modular.rho_prime.automorphism", "rho'(ab) = rho'(a)rho'(b)",
        [&] { return check_automorphism(alg, g.rho_prime, "rho'"); });
  r.run("modular.rho.functional", "phi a = rho(a) phi", [&] {
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = compare(act_right(alg, g.phi, alg.basis(a)), act_left(alg, g.rho.column(a), g.phi),
                           "phi e_a = rho(e_a) phi at " + idx(a));
          !v)
        return v;
    return Verdict::pass();
  });
  r.run("modular.delta.defining", "(phi (x) i)(Delta(a)(1 (x) b)) = phi(a) delta b", [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec lhs = slice_t(h, 1, a, b, g.phi, Leg::First);
        if (auto v = compare(lhs, g.phi[a] * d.left.column(b), "at " + idx2(a, b)); !v) return v;
      }
    return check_multiplier(alg, d);
  });
  r.run("modular.delta.companion", "(i (x) psi)(Delta(a)(b (x) 1)) = psi(a) delta^-1 b", [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec lhs = slice_t(h, 0, a, b, g.psi, Leg::Second);
        if (auto v = compare(lhs, g.psi[a] * d_inv.left.column(b), "at " + idx2(a, b)); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("modular.mu", "phi(S^2(a)) = mu phi(a)", [&] {
    return compare(s2.transpose().apply(g.phi), g.mu * g.phi, "phi o S^2 vs mu phi");
  });
  r.run("modular.S_rho_prime", "S rho' = rho S", [&] { return compare(s * g.rho_prime, g.rho * s, "S rho' vs rho S"); });
  r.run("modular.S2_rho", "S^2 rho = rho S^2", [&] { return compare(s2 * g.rho, g.rho * s2, "S^2 rho vs rho S^2"); });
  r.run("modular.S2_rho_prime", "S^2 rho' = rho' S^2",
        [&] { return compare(s2 * g.rho_prime, g.rho_prime * s2, "S^2 rho' vs rho' S^2"); });
  r.run("modular.delta_rho", "Delta(rho(a)) = (S^2 (x) rho)Delta(a)", [&] {
    Matrix sigma = kron(s2, g.rho);
    Matrix sigma_inv = kron(s2_inv, invert(g.rho));
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = compare(delta_of(h, g.rho.column(a)), transport(h.delta[a], sigma, sigma_inv, false), "at " + idx(a));
          !v)
        return v;
    return Verdict::pass();
  });
  r.run("modular.delta_rho_prime", "Delta(rho'(a)) = (rho' (x) S^-2)Delta(a)", [&] {
    Matrix sigma = kron(g.rho_prime, s2_inv);
    Matrix sigma_inv = kron(invert(g.rho_prime), s2);
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = compare(delta_of(h, g.rho_prime.column(a)), transport(h.delta[a], sigma, sigma_inv, false),
                           "at " + idx(a));
          !v)
        return v;
    return Verdict::pass();
  });
  r.run("modular.delta_grouplike", "Delta(delta) = delta (x) delta",
        [&] { return compare(extend_delta(h, d), kron(d, d), "Delta(delta) vs delta x delta"); });
  r.run("modular.counit_delta", "eps(delta) = 1", [&] {
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = compare(dot(h.counit, d.left.column(a)), h.counit[a], "eps(delta e_a) = eps(e_a) at " + idx(a)); !v)
        return v;
    return compare(extend_counit(h, d), Scalar(1), "eps(delta)");
  });
  r.run("modular.antipode_delta", "S(delta) = delta^-1",
        [&] { return compare(extend_antipode(h, d), d_inv, "S(delta) vs delta^-1"); });
  r.run("modular.phi_S", "phi(S(a)) = phi(a delta)", [&] {
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = compare(dot(g.phi, s.column(a)), dot(g.phi, d.right.column(a)), "at " + idx(a)); !v) return v;
    return Verdict::pass();
  });
  r.run("modular.phi_delta_mu", "phi(a delta) = mu phi(delta a)", [&] {
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = compare(dot(g.phi, d.right.column(a)), g.mu * dot(g.phi, d.left.column(a)), "at " + idx(a)); !v)
        return v;
    return Verdict::pass();
  });
  r.run("modular.rho_delta", "rho(delta) = mu^-1 delta", [&] {
    return compare(transport(d, g.rho, invert(g.rho), false), g.mu.inverse() * d, "rho(delta) vs mu^-1 delta");
  });
  r.run("modular.rho_prime_delta", "rho'(delta) = mu^-1 delta", [&] {
    return compare(transport(d, g.rho_prime, invert(g.rho_prime), false), g.mu.inverse() * d,
                   "rho'(delta) vs mu^-1 delta");
  });
  r.run("modular.rho_prime_conjugate", "rho'(a) = delta rho(a) delta^-1", [&] {
    for (std::size_t a = 0; a < n; ++a) {
      Vec rhs = d.left.apply(d_inv.right.apply(g.rho.column(a)));
      if (auto v = compare(g.rho_prime.column(a), rhs, "at " + idx(a)); !v) return v;
    }
    return Verdict::pass();
  });
  r.run("identity.phi_antipode", "(i (x) phi)((1 (x) a)Delta(b)) = S((i (x) phi)(Delta(a)(1 (x) b)))", [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec lhs = slice_t(h, 3, b, a, g.phi, Leg::Second);
        Vec rhs = s.apply(slice_t(h, 1, a, b, g.phi, Leg::Second));
        if (auto v = compare(lhs, rhs, "at " + idx2(a, b)); !v) return v;
      }
    return Verdict::pass();
  });
  r.run("identity.psi_antipode", "(psi (x) i)((a (x) 1)Delta(b)) = S^-1((psi (x) i)(Delta(a)(b (x) 1)))", [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec lhs = slice_t(h, 2, b, a, g.psi, Leg::First);
        Vec rhs = s_inv.apply(slice_t(h, 0, a, b, g.psi, Leg::First));
        if (auto v = compare(lhs, rhs, "at " + idx2(a, b)); !v) return v;
      }
    return Verdict::pass();
  });
}

}  // namespace aqg
