#include <doctest.h>

#include "fixtures.hpp"

using aqg::Corepresentation;
using aqg::Multiplier;
using aqg::Scalar;
using aqg::Vec;

namespace {

Corepresentation trivial(const fx::Model& m) {
  return Corepresentation(fx::scalars(), aqg::identity_multiplier(m.algebra().dim()));
}

bool star_homomorphism(const fx::Model& m, const Corepresentation& c) {
  const auto pi = aqg::pi_of(m.g, c);
  return aqg::check_homomorphism(m.d, pi).ok && aqg::check_star_preserving(m.d, pi).ok;
}

// Round trip through the dual: V -> pi_V -> (i (x) pi_V)(U).
void check_round_trip(const fx::Model& m, const Corepresentation& c) {
  const auto pi = aqg::pi_of(m.g, c);
  const auto back = aqg::apply_to_universal(m.g, m.u_element, pi);
  CHECK(back.v == c.v);
  const auto again = aqg::pi_of(m.g, back);
  CHECK(again.images == pi.images);
}

std::vector<std::pair<std::string, Corepresentation>> matrix_coreps(const fx::Model& m) {
  std::vector<std::pair<std::string, Corepresentation>> out;
  if (fx::is_function_model(m.name)) {
    out.emplace_back("unitary rep", fx::function_corep(m, fx::unitary_rep(m.name)));
    out.emplace_back("non-unitary rep", fx::function_corep(m, fx::nonunitary_rep(m.name)));
  } else if (fx::is_group_model(m.name)) {
    out.emplace_back("orthogonal projections", fx::group_corep(m, 0, 1, fx::kDiagonalProjection));
    out.emplace_back("skew projections", fx::group_corep(m, 0, 1, fx::kSkewProjection));
  } else {
    out.emplace_back("triangular", fx::sweedler_corep(m));
  }
  return out;
}

}  // namespace

TEST_CASE("universal corepresentation of functions on C2") {
  const auto& m = fx::model("fun_c2");
  // delta_e (x) lambda_e + delta_g (x) lambda_g, the dual basis being the evaluations
  CHECK(m.u_element == Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
  CHECK(aqg::universal_as_element(m.g, m.d, m.u.v) == m.u_element);
  CHECK(m.u.v == aqg::multiplier_from_element(aqg::tensor(m.algebra(), m.dual()), m.u_element));
  // S = identity and U is an involution
  const auto inv = aqg::inverse(m.u.v);
  REQUIRE(inv.has_value());
  CHECK(*inv == m.u.v);
  CHECK(aqg::antipode_slice(m.g, m.u) == m.u.v);
}

TEST_CASE("universal corepresentation on every model") {
  for (const auto& name : fx::acceptance_models()) {
    CAPTURE(name);
    const auto& m = fx::model(name);
    const std::size_t n = m.algebra().dim();
    CHECK(aqg::is_corep(m.g, m.u));
    const auto inv = aqg::inverse(m.u.v);
    REQUIRE(inv.has_value());
    CHECK(aqg::antipode_slice(m.g, m.u) == *inv);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(aqg::slice(m.g, m.u, fx::generator_functional(m, i)) ==
            aqg::multiplier_from_element(m.dual(), m.dual().basis(i)));
    CHECK(aqg::slice(m.g, m.u, m.g.hopf.counit) == aqg::identity_multiplier(n));
    CHECK(aqg::slice(m.g, m.u, aqg::zero_vec(n)) == aqg::zero_multiplier(n));
    CHECK(aqg::check_dual_comultiplication(m.g, m.d, m.u.v).ok);
    CHECK(aqg::check_flip_universal(m.g, m.d, m.dd, m.u.v).ok);
    // pi_U is the identity of the dual
    CHECK(aqg::pi_of(m.g, m.u).images == fx::identity_hom(m).images);
    const auto triple = aqg::nondegeneracy_triple(m.g, m.u);
    CHECK(triple.invertible);
    CHECK(triple.pi_nondegenerate);
    CHECK(triple.spans_full);
    CHECK(aqg::check_sandwich_spans(m.g, m.u).ok);

    aqg::Report r;
    aqg::run_universal_checks(m.g, m.d, m.dd, r);
    for (const auto& e : r.entries()) {
      CAPTURE(e.id);
      CAPTURE(e.witness);
      CHECK(e.status == aqg::Status::Pass);
    }
  }
}

TEST_CASE("trivial and zero corepresentations") {
  for (const auto& name : fx::acceptance_models()) {
    CAPTURE(name);
    const auto& m = fx::model(name);
    const auto t = trivial(m);
    CHECK(aqg::is_corep(m.g, t));
    CHECK(aqg::antipode_slice(m.g, t) == t.v);
    // pi of the trivial corepresentation is the dual counit
    CHECK(aqg::pi_of(m.g, t).images == fx::counit_hom(m).images);
    const auto tri = aqg::nondegeneracy_triple(m.g, t);
    CHECK((tri.invertible && tri.pi_nondegenerate && tri.spans_full));
    if (m.algebra().has_star()) CHECK(aqg::check_unitary(m.g, t).ok);

    const Corepresentation zero(m.dual(), aqg::zero_multiplier(m.algebra().dim() * m.dual().dim()));
    CHECK(aqg::is_corep(m.g, zero));
    const auto z = aqg::nondegeneracy_triple(m.g, zero);
    CHECK_FALSE(z.invertible);
    CHECK_FALSE(z.pi_nondegenerate);
    CHECK_FALSE(z.spans_full);
  }
}

TEST_CASE("corrupted universal element is not a corepresentation") {
  for (const auto& name : fx::acceptance_models()) {
    CAPTURE(name);
    const auto& m = fx::model(name);
    Vec z = m.u_element;
    z[1] += Scalar(1);
    const auto bad = fx::corep_of_element(m.algebra(), m.dual(), z);
    CHECK_FALSE(aqg::is_corep(m.g, bad));
    CHECK_FALSE(aqg::check_corep(m.g, bad).witness.empty());
  }
}

TEST_CASE("homomorphisms of the dual give corepresentations and back") {
  for (const auto& name : fx::acceptance_models()) {
    CAPTURE(name);
    const auto& m = fx::model(name);
    const auto ident = aqg::corep_from_hom(m.g, m.d, m.u_element, fx::identity_hom(m));
    CHECK(ident.v == m.u.v);
    const auto eps = aqg::corep_from_hom(m.g, m.d, m.u_element, fx::counit_hom(m));
    CHECK(eps.v == aqg::identity_multiplier(m.algebra().dim()));
    aqg::DualHomomorphism zero{fx::scalars(), std::vector<Multiplier>(m.dual().dim(), aqg::zero_multiplier(1))};
    CHECK_THROWS_AS(aqg::corep_from_hom(m.g, m.d, m.u_element, zero), aqg::Error);

    for (const auto& [label, c] : matrix_coreps(m)) {
      CAPTURE(label);
      REQUIRE(aqg::is_corep(m.g, c));
      check_round_trip(m, c);
      const auto pi = aqg::pi_of(m.g, c);
      CHECK(aqg::check_homomorphism(m.d, pi).ok);
      CHECK(aqg::hom_nondegenerate(pi));
      const auto inv = aqg::inverse(c.v);
      REQUIRE(inv.has_value());
      CHECK(aqg::antipode_slice(m.g, c) == *inv);
      aqg::Report r;
      aqg::run_corep_checks(m.g, m.d, c, r);
      for (const auto& e : r.entries()) {
        CAPTURE(e.id);
        CAPTURE(e.witness);
        CHECK(e.status == aqg::Status::Pass);
      }
    }
  }
}

TEST_CASE("unitarity matches star preservation of pi") {
  for (const auto& name : fx::group_models()) {
    CAPTURE(name);
    const auto& m = fx::model(name);
    CHECK(aqg::check_unitary(m.g, m.u).ok);
    CHECK(star_homomorphism(m, m.u));
    const auto cs = matrix_coreps(m);
    CHECK(aqg::check_unitary(m.g, cs[0].second).ok);
    CHECK(star_homomorphism(m, cs[0].second));
    CHECK_FALSE(aqg::check_unitary(m.g, cs[1].second).ok);
    CHECK_FALSE(star_homomorphism(m, cs[1].second));
    // 2U: neither unitary nor multiplicative in the dual
    const Corepresentation twice(m.dual(), Scalar(2) * m.u.v);
    CHECK_FALSE(aqg::is_corep(m.g, twice));
    CHECK_FALSE(aqg::check_unitary(m.g, twice).ok);
    CHECK_FALSE(star_homomorphism(m, twice));
  }
  CHECK_THROWS_AS(aqg::check_unitary(fx::model("sweedler").g, fx::model("sweedler").u), aqg::Error);
}

TEST_CASE("random corepresentations: nondegeneracy conditions agree") {
  for (const auto& name : fx::acceptance_models()) {
    CAPTURE(name);
    const auto& m = fx::model(name);
    int degenerate = 0;
    for (const auto& [label, c] : fx::random_coreps(m, 6, 23)) {
      CAPTURE(label);
      REQUIRE(aqg::is_corep(m.g, c));
      const auto t = aqg::nondegeneracy_triple(m.g, c);
      CHECK(t.agree());
      degenerate += !t.invertible;
      check_round_trip(m, c);
    }
    CHECK(degenerate > 0);
  }
}
