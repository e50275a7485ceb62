#include "aqg/corep.hpp"

#include "aqg/error.hpp"

namespace aqg {

namespace {

std::string gen(std::size_t i) { return "w" + std::to_string(i); }

std::vector<Matrix> left_mults(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.left_multiplication(a.basis(i)));
  return out;
}

std::vector<Matrix> right_mults(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.right_multiplication(a.basis(i)));
  return out;
}

// Slice of V on (first factor of dimension na) (x) B; the first factor only enters
// through the functionals and the elements a_t.
Multiplier slice_general(const Multiplier& v, const Decomposition& w, const Algebra& b, const Vec& unit_b,
                         std::size_t na) {
  const std::size_t nb = b.dim();
  const std::vector<std::size_t> dims{na, nb};
  Multiplier out = zero_multiplier(nb);
  for (const auto& [a, f] : w) {
    if (is_zero(a) || is_zero(f)) continue;
    Vec va1 = v.left.apply(kron(a, unit_b));  // V(a (x) 1)
    for (std::size_t x = 0; x < nb; ++x) {
      Vec ex = b.basis(x);
      out.left.set_column(x, out.left.column(x) + contract_first(f, v.left.apply(kron(a, ex)), nb));
      Vec xva = apply_on_leg(b.left_multiplication(ex), va1, dims, 1);  // (1 (x) x)V(a (x) 1)
      out.right.set_column(x, out.right.column(x) + contract_first(f, xva, nb));
    }
  }
  return out;
}

std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t width) {
  RowSelector sel(width);
  for (const auto& v : vectors) {
    if (sel.full()) break;
    sel.offer(v);
  }
  return sel.rank();
}

Multiplier multiplier_of_tensor(const std::vector<Matrix>& la, const std::vector<Matrix>& ra, const Vec& z,
                                const std::vector<Multiplier>& images, std::size_t m) {
  const std::size_t n = la.size();
  const std::size_t nb = images.empty() ? 0 : images.front().dim();
  Multiplier out = zero_multiplier(n * nb);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar& c = z[k * m + j];
      if (c.is_zero()) continue;
      out.left = out.left + c * kron(la[k], images[j].left);
      out.right = out.right + c * kron(ra[k], images[j].right);
    }
  return out;
}

}  // namespace

Corepresentation::Corepresentation(Algebra b, Multiplier m) : target(std::move(b)), v(std::move(m)) {
  target_unit = local_unit(target);
}

Multiplier construct_universal(const QuantumGroup& g, const DualQG& d) {
  const std::size_t n = g.dim();
  const std::size_t m = d.qg.dim();
  const Matrix& t1 = g.hopf.t.forward[0];
  const Matrix& t4 = g.hopf.t.forward[3];
  const Matrix& gr = d.gram;
  Matrix gram_inv = invert(gr);
  Multiplier u = zero_multiplier(n * m);
  auto flatten = [&](const Matrix& z) {
    Vec out(n * m);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j) out[k * m + j] = z(k, j);
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // Values at y of the element U(e_a (x) w_b), then of (e_a (x) w_b)U; z G = values.
      Matrix kl(n, n), kr(n, n);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const Scalar& x1 = t1(k * n + l, y * n + a);
            if (!x1.is_zero()) kl(k, y) += x1 * gr(b, l);
            const Scalar& x4 = t4(k * n + l, y * n + a);
            if (!x4.is_zero()) kr(l, y) += x4 * gr(b, k);
          }
      u.left.set_column(a * m + b, flatten(kl * gram_inv));
      u.right.set_column(a * m + b, flatten(kr * gram_inv));
    }
  return u;
}

Vec universal_element(const QuantumGroup& g, const DualQG& d) {
  const std::size_t n = g.dim();
  const std::size_t m = d.qg.dim();
  Vec z(n * m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < m; ++j) z[k * m + j] = d.to_coords(j, k);
  return z;
}

Vec universal_as_element(const QuantumGroup& g, const DualQG& d, const Multiplier& u) {
  ElementRecovery rec(tensor(g.algebra(), d.qg.algebra()));
  auto z = rec.from_multiplier(u);
  if (!z) throw Error(ErrorCode::UniversalConstructionFailure, "U is not an element of A (x) dual");
  return *z;
}

Corepresentation build_universal(const QuantumGroup& g, const DualQG& d) {
  Corepresentation c(d.qg.algebra(), construct_universal(g, d));
  auto require = [](const Verdict& v) {
    if (!v) throw Error(ErrorCode::UniversalConstructionFailure, v.witness);
  };
  require(check_multiplier(tensor(g.algebra(), c.target), c.v));
  require(check_corep(g, c));
  if (!inverse(c.v)) throw Error(ErrorCode::UniversalConstructionFailure, "U is not invertible");
  for (std::size_t i = 0; i < d.qg.dim(); ++i)
    require(compare(slice(g, c, phi_a(g, g.algebra().basis(i))), multiplier_from_element(c.target, c.target.basis(i)),
                    "(w (x) i)(U) = w at " + gen(i)));
  require(compare(slice(g, c, g.hopf.counit), identity_multiplier(c.dim_target()), "(eps (x) i)(U) = 1"));
  return c;
}

Verdict check_corep(const QuantumGroup& g, const Corepresentation& c) {
  const std::size_t n = g.dim();
  const std::size_t nb = c.dim_target();
  const std::array<std::size_t, 3> dims{n, n, nb};
  Multiplier lhs = comultiply_first_leg(g.hopf, c.v, nb);
  Multiplier rhs = leg_embed(c.v, dims, 1) * leg_embed(c.v, dims, 0);
  return compare(lhs, rhs, "(Delta (x) i)(V) = V13 V23");
}

bool is_corep(const QuantumGroup& g, const Corepresentation& c) { return check_corep(g, c).ok; }

Multiplier slice(const QuantumGroup& g, const Corepresentation& c, const Decomposition& w) {
  return slice_general(c.v, w, c.target, c.target_unit, g.dim());
}

Multiplier slice(const QuantumGroup& g, const Corepresentation& c, const Vec& w) {
  return slice(g, c, Decomposition{{g.hopf.unit, w}});
}

DualHomomorphism pi_of(const QuantumGroup& g, const Corepresentation& c) {
  DualHomomorphism t{c.target, {}};
  for (std::size_t i = 0; i < g.dim(); ++i) t.images.push_back(slice(g, c, phi_a(g, g.algebra().basis(i))));
  return t;
}

Multiplier hom_apply(const DualHomomorphism& t, const Vec& coords) {
  Multiplier out = zero_multiplier(t.target.dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out = out + coords[i] * t.images[i];
  return out;
}

Verdict check_homomorphism(const DualQG& d, const DualHomomorphism& t) {
  const Algebra& dual = d.qg.algebra();
  for (std::size_t i = 0; i < dual.dim(); ++i)
    for (std::size_t j = 0; j < dual.dim(); ++j)
      if (auto v = compare(t.images[i] * t.images[j], hom_apply(t, dual.multiply(dual.basis(i), dual.basis(j))),
                           "t(" + gen(i) + ") t(" + gen(j) + ") = t(" + gen(i) + " " + gen(j) + ")");
          !v)
        return v;
  return Verdict::pass();
}

Verdict check_star_preserving(const DualQG& d, const DualHomomorphism& t) {
  const Algebra& dual = d.qg.algebra();
  if (!dual.has_star() || !t.target.has_star()) return Verdict::fail("no star on the dual or on the target");
  for (std::size_t i = 0; i < dual.dim(); ++i)
    if (auto v = compare(hom_apply(t, dual.star(dual.basis(i))), star(t.target, t.images[i]),
                         "t(" + gen(i) + "^*) = t(" + gen(i) + ")^*");
        !v)
      return v;
  return Verdict::pass();
}

bool hom_nondegenerate(const DualHomomorphism& t) {
  const std::size_t nb = t.target.dim();
  std::vector<Vec> left, right;
  for (const auto& m : t.images)
    for (std::size_t b = 0; b < nb; ++b) {
      left.push_back(m.left.column(b));    // t(w) b
      right.push_back(m.right.column(b));  // b t(w)
    }
  return span_rank(left, nb) == nb && span_rank(right, nb) == nb;
}

Corepresentation apply_to_universal(const QuantumGroup& g, const Vec& u_element, const DualHomomorphism& t) {
  const Algebra& alg = g.algebra();
  return Corepresentation(t.target,
                          multiplier_of_tensor(left_mults(alg), right_mults(alg), u_element, t.images, t.images.size()));
}

Corepresentation corep_from_hom(const QuantumGroup& g, const DualQG& d, const Vec& u_element,
                                const DualHomomorphism& t) {
  if (auto v = check_homomorphism(d, t); !v) throw Error(ErrorCode::DegenerateHomomorphism, "not multiplicative: " + v.witness);
  if (!hom_nondegenerate(t)) throw Error(ErrorCode::DegenerateHomomorphism, "t(dual)B or B t(dual) is a proper subspace of B");
  return apply_to_universal(g, u_element, t);
}

Multiplier antipode_slice(const QuantumGroup& g, const Corepresentation& c) {
  const Algebra& alg = g.algebra();
  const std::size_t n = g.dim();
  const std::size_t nb = c.dim_target();
  const std::vector<std::size_t> dims{n, nb};
  const Matrix& s = g.hopf.antipode;
  const Matrix& s_inv = g.hopf.antipode_inv;
  Multiplier out = zero_multiplier(n * nb);
  for (std::size_t a = 0; a < n; ++a) {
    Vec sa = s_inv.column(a);
    Matrix l_sa = alg.left_multiplication(sa);
    Vec v_sa = c.v.left.apply(kron(sa, c.target_unit));  // V(S^-1(a) (x) 1)
    for (std::size_t b = 0; b < nb; ++b) {
      Vec eb = c.target.basis(b);
      Vec left = apply_on_leg(l_sa, c.v.left.apply(kron(g.hopf.unit, eb)), dims, 0);
      out.left.set_column(a * nb + b, apply_on_leg(s, left, dims, 0));
      Vec right = apply_on_leg(c.target.left_multiplication(eb), v_sa, dims, 1);
      out.right.set_column(a * nb + b, apply_on_leg(s, right, dims, 0));
    }
  }
  return out;
}

NondegeneracyTriple nondegeneracy_triple(const QuantumGroup& g, const Corepresentation& c) {
  NondegeneracyTriple t;
  const std::size_t total = g.dim() * c.dim_target();
  t.invertible = inverse(c.v).has_value();
  t.pi_nondegenerate = hom_nondegenerate(pi_of(g, c));
  t.spans_full = rank(c.v.left) == total && rank(c.v.right) == total;
  return t;
}

Verdict check_sandwich_spans(const QuantumGroup& g, const Corepresentation& c) {
  const Algebra& alg = g.algebra();
  const std::size_t n = g.dim();
  const std::size_t nb = c.dim_target();
  const std::vector<std::size_t> dims{n, nb};
  auto inv = inverse(c.v);
  if (!inv) return Verdict::fail("V is not invertible");
  const std::pair<const char*, const Multiplier*> items[] = {{"V", &c.v}, {"V^-1", &*inv}};
  for (const auto& [name, x] : items) {
    std::vector<Vec> first, second;
    for (std::size_t a = 0; a < n; ++a) {
      Matrix la = alg.left_multiplication(alg.basis(a));
      Vec xa1 = x->left.apply(kron(alg.basis(a), c.target_unit));
      for (std::size_t b = 0; b < nb; ++b) {
        Vec eb = c.target.basis(b);
        first.push_back(apply_on_leg(la, x->left.apply(kron(g.hopf.unit, eb)), dims, 0));
        second.push_back(apply_on_leg(c.target.left_multiplication(eb), xa1, dims, 1));
      }
    }
    if (std::size_t r = span_rank(first, n * nb); r != n * nb)
      return Verdict::fail(std::string("(a x 1)") + name + "(1 x b) spans dimension " + std::to_string(r));
    if (std::size_t r = span_rank(second, n * nb); r != n * nb)
      return Verdict::fail(std::string("(1 x b)") + name + "(a x 1) spans dimension " + std::to_string(r));
  }
  return Verdict::pass();
}

Verdict check_unitary(const QuantumGroup& g, const Corepresentation& c) {
  Algebra ab = tensor(g.algebra(), c.target);
  if (!ab.has_star()) throw Error(ErrorCode::NoStarStructure, "unitarity needs stars on A and B");
  Multiplier vs = star(ab, c.v);
  Multiplier one = identity_multiplier(ab.dim());
  if (auto v = compare(vs * c.v, one, "V^* V = 1"); !v) return v;
  return compare(c.v * vs, one, "V V^* = 1");
}

Verdict check_dual_comultiplication(const QuantumGroup& g, const DualQG& d, const Multiplier& u) {
  const std::size_t n = g.dim();
  const std::size_t m = d.qg.dim();
  const std::array<std::size_t, 3> dims{n, m, m};
  Multiplier lhs = comultiply_last_leg(d.qg.hopf, u, n);
  Multiplier rhs = leg_embed(u, dims, 2) * leg_embed(u, dims, 1);
  return compare(lhs, rhs, "(i (x) Delta^)(U) = U12 U13");
}

Verdict check_flip_universal(const QuantumGroup& g, const DualQG& d, const DualQG& dd, const Multiplier& u) {
  const std::size_t n = g.dim();
  const std::size_t m = d.qg.dim();
  Multiplier flipped = transport(u, flip_matrix(n, m), flip_matrix(m, n), false);
  Multiplier dual_u = construct_universal(d.qg, dd);
  Matrix ups = bidual_map(d, dd);
  auto ups_inv = try_invert(ups);
  if (!ups_inv) return Verdict::fail("evaluation map is singular");
  Matrix id = Matrix::identity(m);
  Multiplier read = transport(dual_u, kron(id, *ups_inv), kron(id, ups), false);
  return compare(flipped, read, "flip(U) = universal corepresentation of the dual");
}

void run_universal_checks(const QuantumGroup& g, const DualQG& d, const DualQG& dd, Report& r) {
  const Algebra& alg = g.algebra();
  const Algebra& dual = d.qg.algebra();
  const std::size_t m = d.qg.dim();
  Corepresentation c;
  bool built = false;
  r.run("universal.construct", "[U(x (x) w)](y) = (i (x) w)(Delta(y)(x (x) 1))", [&] {
    c = Corepresentation(dual, construct_universal(g, d));
    built = true;
    return Verdict::pass();
  });
  if (!built) return;
  Algebra ab = tensor(alg, dual);
  r.run("universal.multiplier", "U is a multiplier of A (x) dual", [&] { return check_multiplier(ab, c.v); });
  Vec element;
  r.run("universal.element", "U = sum_k e_k (x) e^k", [&] {
    element = universal_as_element(g, d, c.v);
    return compare(element, universal_element(g, d), "U as an element");
  });
  r.run("universal.corep", "(Delta (x) i)(U) = U13 U23", [&] { return check_corep(g, c); });
  auto inv = inverse(c.v);
  r.add("universal.invertible", "U is invertible in M(A (x) dual)",
        inv ? Verdict::pass() : Verdict::fail("left or right action of U is singular"));
  r.run("universal.slices", "(w (x) i)(U) = w", [&] {
    for (std::size_t i = 0; i < m; ++i)
      if (auto v = compare(slice(g, c, phi_a(g, alg.basis(i))), multiplier_from_element(dual, dual.basis(i)),
                           "at " + gen(i));
          !v)
        return v;
    return Verdict::pass();
  });
  r.run("universal.counit_slice", "(eps (x) i)(U) = 1",
        [&] { return compare(slice(g, c, g.hopf.counit), identity_multiplier(m), "(eps x i)(U)"); });
  r.run("universal.dual_counit_slice", "(i (x) eps^)(U) = 1", [&] {
    if (element.empty()) return Verdict::fail("U has no element form");
    return compare(contract_second(element, d.qg.hopf.counit, g.dim()), g.hopf.unit, "(i x eps^)(U)");
  });
  if (inv) {
    r.run("universal.antipode_slice", "(S (x) i)(U) = U^-1",
          [&] { return compare(antipode_slice(g, c), *inv, "(S x i)(U)"); });
    r.run("universal.inverse_slices", "(w (x) i)(U^-1) = S^(w)", [&] {
      Corepresentation ci(dual, *inv);
      for (std::size_t i = 0; i < m; ++i)
        if (auto v = compare(slice(g, ci, phi_a(g, alg.basis(i))),
                             multiplier_from_element(dual, d.qg.hopf.antipode.column(i)), "at " + gen(i));
            !v)
          return v;
      return Verdict::pass();
    });
    r.run("universal.spans", "A (x) dual = <(a (x) 1)X(1 (x) b)> = <(1 (x) b)X(a (x) 1)> for X = U, U^-1",
          [&] { return check_sandwich_spans(g, c); });
  } else {
    r.skip("universal.antipode_slice", "(S (x) i)(U) = U^-1", "U is not invertible");
    r.skip("universal.inverse_slices", "(w (x) i)(U^-1) = S^(w)", "U is not invertible");
    r.skip("universal.spans", "A (x) dual = <(a (x) 1)X(1 (x) b)> = <(1 (x) b)X(a (x) 1)> for X = U, U^-1",
           "U is not invertible");
  }
  r.run("universal.nondegenerate", "U invertible, pi_U non-degenerate, U(A (x) dual) = A (x) dual", [&] {
    auto t = nondegeneracy_triple(g, c);
    if (t.invertible && t.pi_nondegenerate && t.spans_full) return Verdict::pass();
    return Verdict::fail("invertible=" + std::to_string(t.invertible) + " pi=" + std::to_string(t.pi_nondegenerate) +
                         " spans=" + std::to_string(t.spans_full));
  });
  r.run("universal.round_trip", "(i (x) pi_U)(U) = U", [&] {
    if (element.empty()) return Verdict::fail("U has no element form");
    return compare(corep_from_hom(g, d, element, pi_of(g, c)).v, c.v, "(i x pi_U)(U)");
  });
  r.run("universal.dual_comultiplication", "(i (x) Delta^)(U) = U12 U13",
        [&] { return check_dual_comultiplication(g, d, c.v); });
  r.run("universal.flip", "flip(U) is the universal corepresentation of the dual",
        [&] { return check_flip_universal(g, d, dd, c.v); });
  if (ab.has_star()) {
    r.run("universal.unitary", "U^* U = U U^* = 1", [&] { return check_unitary(g, c); });
    r.run("universal.star_slices", "(w^* (x) i)(U) = ((w (x) i)(U))^*",
          [&] { return check_star_preserving(d, pi_of(g, c)); });
  }
}

void run_corep_checks(const QuantumGroup& g, const DualQG& d, const Corepresentation& c, Report& r,
                      std::uint64_t seed) {
  const Algebra& alg = g.algebra();
  const std::size_t n = g.dim();
  const std::size_t nb = c.dim_target();
  Algebra ab = tensor(alg, c.target);
  r.run("corep.multiplier", "V is a multiplier of A (x) B", [&] { return check_multiplier(ab, c.v); });
  bool corep = false;
  r.run("corep.comultiplication", "(Delta (x) i)(V) = V13 V23", [&] {
    Verdict v = check_corep(g, c);
    corep = v.ok;
    return v;
  });
  const char* not_corep = "V is not a corepresentation";
  DualHomomorphism pi = pi_of(g, c);
  const std::string products = "(w1 (x) i)(V)(w2 (x) i)(V) = (w1 w2 (x) i)(V)";
  const std::string tensor_slice = "(w1 w2 (x) i)(V) = (w1 (x) w2 (x) i)((Delta (x) i)(V))";
  const std::string triple = "V invertible <=> pi_V non-degenerate <=> V(A (x) B) = (A (x) B)V = A (x) B";
  if (!corep) {
    r.skip("corep.slice_products", products, not_corep);
    r.skip("corep.slice_tensor", tensor_slice, not_corep);
    r.skip("corep.nondegeneracy", triple, not_corep);
  } else {
    r.run("corep.slice_products", products, [&] { return check_homomorphism(d, pi); });
    r.run("corep.slice_tensor", tensor_slice, [&] {
      Multiplier w = comultiply_first_leg(g.hopf, c.v, nb);
      Vec unit2 = kron(g.hopf.unit, g.hopf.unit);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec wi = phi_a(g, alg.basis(i)), wj = phi_a(g, alg.basis(j));
          Multiplier lhs = hom_apply(pi, d.qg.algebra().multiply(d.qg.algebra().basis(i), d.qg.algebra().basis(j)));
          Multiplier rhs = slice_general(w, {{unit2, kron(wi, wj)}}, c.target, c.target_unit, n * n);
          if (auto v = compare(lhs, rhs, "at (" + gen(i) + ", " + gen(j) + ")"); !v) return v;
        }
      return Verdict::pass();
    });
  }
  r.run("corep.slices_separate", "V = 0 <=> (w (x) i)(V) = 0 for every w", [&] {
    bool zero = c.v.left.is_zero() && c.v.right.is_zero();
    bool slices_zero = true;
    for (const auto& m : pi.images) slices_zero = slices_zero && m.left.is_zero() && m.right.is_zero();
    if (zero == slices_zero) return Verdict::pass();
    return Verdict::fail(zero ? "V = 0 but a slice is non-zero" : "V != 0 but every slice vanishes");
  });
  r.run("corep.slice_decompositions", "sum_t (w_t (x) i)(V(a_t (x) x)) depends only on sum_t a_t w_t", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto rnd = [&] {
      Vec v(n);
      for (auto& s : v) s = Scalar(coeff(rng), coeff(rng));
      return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
      Vec w = phi_a(g, alg.basis(i));
      Vec a = rnd(), w2 = rnd();
      Decomposition other{{a, w2}, {g.hopf.unit, w - act_left(alg, a, w2)}};
      if (auto v = compare(slice(g, c, other), slice(g, c, w), "at " + gen(i)); !v) return v;
    }
    return Verdict::pass();
  });
  NondegeneracyTriple t;
  if (corep)
    r.run("corep.nondegeneracy", triple, [&] {
      t = nondegeneracy_triple(g, c);
      if (t.agree()) return Verdict::pass();
      return Verdict::fail("invertible=" + std::to_string(t.invertible) + " pi=" + std::to_string(t.pi_nondegenerate) +
                           " spans=" + std::to_string(t.spans_full));
    });
  auto inv = inverse(c.v);
  const char* degenerate = "V is not invertible";
  const std::pair<const char*, const char*> needs_inverse[] = {
      {"corep.counit_slice", "(eps (x) i)(V) = 1"},
      {"corep.antipode_slice", "(S (x) i)(V) = V^-1"},
      {"corep.inverse_slices", "(w (x) i)(V^-1) = pi_V(S^(w))"},
      {"corep.spans", "A (x) B = <(a (x) 1)X(1 (x) b)> = <(1 (x) b)X(a (x) 1)> for X = V, V^-1"},
      {"corep.round_trip", "(i (x) pi_V)(U) = V and pi_{(i (x) pi_V)(U)} = pi_V"},
  };
  if (!corep || !inv) {
    for (const auto& [id, rel] : needs_inverse) r.skip(id, rel, corep ? degenerate : not_corep);
  } else {
    r.run(needs_inverse[0].first, needs_inverse[0].second,
          [&] { return compare(slice(g, c, g.hopf.counit), identity_multiplier(nb), "(eps x i)(V)"); });
    r.run(needs_inverse[1].first, needs_inverse[1].second,
          [&] { return compare(antipode_slice(g, c), *inv, "(S x i)(V)"); });
    r.run(needs_inverse[2].first, needs_inverse[2].second, [&] {
      Corepresentation ci(c.target, *inv);
      for (std::size_t i = 0; i < n; ++i)
        if (auto v = compare(slice(g, ci, phi_a(g, alg.basis(i))), hom_apply(pi, d.qg.hopf.antipode.column(i)),
                             "at " + gen(i));
            !v)
          return v;
      return Verdict::pass();
    });
    r.run(needs_inverse[3].first, needs_inverse[3].second, [&] { return check_sandwich_spans(g, c); });
    r.run(needs_inverse[4].first, needs_inverse[4].second, [&] {
      Vec element = universal_as_element(g, d, construct_universal(g, d));
      Corepresentation back = corep_from_hom(g, d, element, pi);
      if (auto v = compare(back.v, c.v, "(i x pi_V)(U)"); !v) return v;
      DualHomomorphism again = pi_of(g, back);
      for (std::size_t i = 0; i < n; ++i)
        if (auto v = compare(again.images[i], pi.images[i], "pi at " + gen(i)); !v) return v;
      return Verdict::pass();
    });
  }
  if (corep && inv && ab.has_star())
    r.run("corep.unitary_equivalence", "V unitary <=> pi_V is a *-homomorphism", [&] {
      bool unitary = check_unitary(g, c).ok;
      bool star_hom = check_homomorphism(d, pi).ok && check_star_preserving(d, pi).ok;
      if (unitary == star_hom) return Verdict::pass();
      return Verdict::fail("unitary=" + std::to_string(unitary) + " star-homomorphism=" + std::to_string(star_hom));
    });
}

}  // namespace aqg
