// Counit, antipode, integrals and modular data against a direct solve that treats
// each model as a unital Hopf algebra with Delta(e_a) read off as an element of A (x) A.
#include <doctest.h>

#include <map>

#include "aqg/error.hpp"
#include "aqg/haar.hpp"
#include "aqg/models.hpp"
#include "aqg/spec_io.hpp"
#include "aqg/suite.hpp"

using aqg::Algebra;
using aqg::Matrix;
using aqg::Scalar;
using aqg::Vec;

namespace {

struct UnitalOracle {
  Algebra alg;
  Vec one;
  std::vector<Vec> delta;  // delta[a][j * n + k]: coefficient of e_j (x) e_k

  explicit UnitalOracle(const aqg::AlgebraSpec& spec) : alg(spec.algebra) {
    one = aqg::local_unit(alg);
    for (const auto& m : spec.delta) delta.push_back(m.left.apply(aqg::kron(one, one)));
  }
  std::size_t n() const { return alg.dim(); }
  Scalar d(std::size_t a, std::size_t j, std::size_t k) const { return delta[a][j * n() + k]; }

  // sum_j,k Delta_a[j,k] eps_j e_k = e_a
  Vec counit() const {
    Matrix m(n() * n(), n());
    Vec rhs(n() * n());
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t k = 0; k < n(); ++k) {
        rhs[a * n() + k] = Scalar(a == k ? 1 : 0);
        for (std::size_t j = 0; j < n(); ++j) m(a * n() + k, j) += d(a, j, k);
      }
    auto s = aqg::solve(m, rhs);
    REQUIRE(s.unique());
    return *s.particular;
  }

  // sum_j,k Delta_a[j,k] S(e_j) e_k = eps(a) 1, unknowns S(i, j) at i * n + j
  Matrix antipode(const Vec& eps) const {
    Matrix m(n() * n(), n() * n());
    Vec rhs(n() * n());
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t out = 0; out < n(); ++out) {
        rhs[a * n() + out] = eps[a] * one[out];
        for (std::size_t j = 0; j < n(); ++j)
          for (std::size_t k = 0; k < n(); ++k) {
            if (d(a, j, k).is_zero()) continue;
            for (std::size_t i = 0; i < n(); ++i) {
              const Scalar c = alg.structure_constant(i, k, out);
              if (!c.is_zero()) m(a * n() + out, i * n() + j) += d(a, j, k) * c;
            }
          }
      }
    auto s = aqg::solve(m, rhs);
    REQUIRE(s.unique());
    Matrix out(n(), n());
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) out(i, j) = (*s.particular)[i * n() + j];
    return out;
  }

  // (i (x) phi)Delta(a) = phi(a) 1; returns the solution space
  std::vector<Vec> left_integrals() const {
    Matrix m(n() * n(), n());
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t j = 0; j < n(); ++j) {
        for (std::size_t k = 0; k < n(); ++k) m(a * n() + j, k) += d(a, j, k);
        m(a * n() + j, a) -= one[j];
      }
    return aqg::nullspace(m);
  }
};

const aqg::AlgebraSpec& spec(const std::string& name) {
  static std::map<std::string, aqg::AlgebraSpec> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, aqg::parse_spec(aqg::model_spec(name))).first;
  return it->second;
}

const aqg::QuantumGroup& qg(const std::string& name) {
  static std::map<std::string, aqg::QuantumGroup> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, aqg::quantum_group_of(spec(name))).first;
  return it->second;
}

bool proportional(const Vec& a, const Vec& b) {
  std::size_t p = 0;
  while (p < a.size() && a[p].is_zero()) ++p;
  if (p == a.size()) return aqg::is_zero(b);
  if (b[p].is_zero()) return false;
  return (b[p] / a[p]) * a == b;
}

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

const std::vector<std::string> kModels{"fun_trivial", "fun_c2", "fun_c4", "fun_s3", "grp_trivial",
                                       "grp_c2",      "grp_c4", "grp_s3", "sweedler"};

}  // namespace

TEST_CASE("counit and antipode agree with the unital oracle") {
  for (const auto& name : kModels) {
    CAPTURE(name);
    const auto& g = qg(name);
    UnitalOracle oracle(spec(name));
    const Vec eps = oracle.counit();
    CHECK(g.hopf.counit == eps);
    CHECK(g.hopf.antipode == oracle.antipode(eps));
    CHECK(g.hopf.antipode * g.hopf.antipode_inv == Matrix::identity(g.dim()));
  }
}

TEST_CASE("left integral space is one dimensional and matches the oracle") {
  for (const auto& name : kModels) {
    CAPTURE(name);
    const auto& g = qg(name);
    UnitalOracle oracle(spec(name));
    const auto space = oracle.left_integrals();
    REQUIRE(space.size() == 1);
    CHECK(proportional(space[0], g.phi));
    CHECK(aqg::check_left_invariance(g.hopf, g.phi).ok);
    CHECK(aqg::check_right_invariance(g.hopf, g.psi).ok);
    CHECK(aqg::check_faithful(g.algebra(), g.phi, "phi").ok);
    CHECK(aqg::check_faithful(g.algebra(), g.psi, "psi").ok);
  }
}

TEST_CASE("group models") {
  SUBCASE("functions") {
    for (const std::string name : {"fun_c2", "fun_c4", "fun_s3"}) {
      CAPTURE(name);
      const auto& g = qg(name);
      const std::size_t n = g.dim();
      CHECK(g.hopf.counit == aqg::unit_vec(n, 0));
      CHECK(g.phi == Vec(n, Scalar(1)));
      CHECK(g.psi == g.phi);
      CHECK(g.rho == Matrix::identity(n));
      CHECK(g.rho_prime == Matrix::identity(n));
      CHECK(g.modular == aqg::identity_multiplier(n));
      CHECK(g.mu == Scalar(1));
      const auto table = name == "fun_s3" ? aqg::GroupTable::symmetric3() : aqg::GroupTable::cyclic(n);
      for (std::size_t s = 0; s < n; ++s) CHECK(g.hopf.antipode.column(s) == aqg::unit_vec(n, table.inverse(s)));
    }
    CHECK(qg("fun_c2").hopf.antipode == Matrix::identity(2));
  }
  SUBCASE("group algebras") {
    for (const std::string name : {"grp_c2", "grp_c4", "grp_s3"}) {
      CAPTURE(name);
      const auto& g = qg(name);
      const std::size_t n = g.dim();
      CHECK(g.hopf.counit == Vec(n, Scalar(1)));
      CHECK(g.phi == aqg::unit_vec(n, 0));
      CHECK(g.psi == g.phi);
      CHECK(g.rho == Matrix::identity(n));
      CHECK(g.modular == aqg::identity_multiplier(n));
      CHECK(g.mu == Scalar(1));
      const auto table = name == "grp_s3" ? aqg::GroupTable::symmetric3() : aqg::GroupTable::cyclic(n);
      for (std::size_t s = 0; s < n; ++s) CHECK(g.hopf.antipode.column(s) == aqg::unit_vec(n, table.inverse(s)));
    }
  }
  SUBCASE("trivial group") {
    for (const std::string name : {"fun_trivial", "grp_trivial"}) {
      const auto& g = qg(name);
      CHECK(g.dim() == 1);
      CHECK(g.phi == v({1}));
      CHECK(g.hopf.antipode == Matrix::identity(1));
    }
  }
}

TEST_CASE("Sweedler modular data") {
  // basis {1, g, x, gx}
  const auto& g = qg("sweedler");
  CHECK(g.hopf.counit == v({1, 1, 0, 0}));
  Matrix s(4, 4);
  s(0, 0) = 1;
  s(1, 1) = 1;
  s(3, 2) = -1;  // S(x) = -gx
  s(2, 3) = 1;   // S(gx) = x
  CHECK(g.hopf.antipode == s);
  Matrix s2 = Matrix::identity(4);
  s2(2, 2) = -1;
  s2(3, 3) = -1;
  CHECK(g.hopf.antipode * g.hopf.antipode == s2);
  CHECK(g.phi == v({0, 0, 0, 1}));
  CHECK(g.psi == v({0, 0, -1, 0}));  // psi = phi o S
  CHECK(g.psi != g.phi);
  Matrix rho(4, 4);
  rho(0, 0) = 1;
  rho(1, 1) = -1;
  rho(2, 2) = -1;
  rho(3, 3) = 1;
  CHECK(g.rho == rho);
  CHECK(g.rho != Matrix::identity(4));
  CHECK(g.hopf.recover.from_multiplier(g.modular) == std::optional<Vec>(v({0, 1, 0, 0})));
  CHECK(g.mu == Scalar(-1));
  // the modular element is group-like
  const auto dd = aqg::delta_of(g.hopf, v({0, 1, 0, 0}));
  CHECK(dd == aqg::kron(g.modular, g.modular));
}

TEST_CASE("modular relations hold on every model") {
  for (const auto& name : kModels) {
    CAPTURE(name);
    aqg::Report r;
    aqg::run_modular_checks(qg(name), r);
    CHECK(r.passed());
    CHECK(r.entries().size() >= 10);
    for (const char* id : {"identity.phi_antipode", "identity.psi_antipode"}) {
      const auto* e = r.find(id);
      REQUIRE(e != nullptr);
      CHECK(e->status == aqg::Status::Pass);
    }
  }
}

TEST_CASE("axiom checks on the prepared structure") {
  for (const auto& name : kModels) {
    CAPTURE(name);
    const auto& h = qg(name).hopf;
    CHECK(aqg::check_delta_homomorphism(h).ok);
    CHECK(aqg::check_coassociativity(h).ok);
    for (int t = 0; t < 4; ++t) CHECK(aqg::check_t_map(h, t).ok);
    CHECK(aqg::check_counit_laws(h).ok);
    CHECK(aqg::check_antipode_laws(h).ok);
    CHECK(aqg::check_antipode_comultiplication(h).ok);
    CHECK(aqg::check_antipode_antimultiplicative(h).ok);
  }
}

TEST_CASE("T-maps on the smallest examples") {
  const auto& fun = qg("fun_c2").hopf;
  CHECK(fun.t.regular());
  for (int t = 0; t < 4; ++t) CHECK(fun.t.forward[t] * *fun.t.inverse[t] == Matrix::identity(4));
  // T1(lambda_a (x) lambda_b) = Delta(lambda_a)(lambda_b (x) 1) = lambda_ab (x) lambda_a
  const auto& grp = qg("grp_c2").hopf;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      CHECK(grp.t.forward[0].column(a * 2 + b) == aqg::unit_vec(4, ((a + b) % 2) * 2 + a));

  auto zero = spec("grp_c2");
  for (auto& m : zero.delta) m = aqg::zero_multiplier(4);
  auto h = aqg::prepare_multiplier_hopf(zero.algebra, zero.delta);
  CHECK_FALSE(h.t.regular());
  for (int t = 0; t < 4; ++t) CHECK(h.t.forward[t].is_zero());
}

TEST_CASE("corrupted comultiplication is rejected") {
  auto bad = spec("grp_s3");
  bad.delta[1] = aqg::kron(aqg::multiplier_from_element(bad.algebra, bad.algebra.basis(1)),
                           aqg::multiplier_from_element(bad.algebra, bad.algebra.basis(2)));
  const auto report = aqg::run_full_suite(bad);
  CHECK_FALSE(report.passed());
  CHECK_THROWS_AS(aqg::quantum_group_of(bad), aqg::Error);
}

TEST_CASE("slices of the comultiplication") {
  const auto& g = qg("fun_c2");
  const Vec de = v({1, 0});
  CHECK(aqg::slice_delta_element(g.hopf, g.hopf.counit, de, aqg::Leg::First) == de);
  CHECK(aqg::slice_delta_element(g.hopf, v({0, 1}), de, aqg::Leg::First) == v({0, 1}));
  CHECK(aqg::is_zero(aqg::slice_delta_element(g.hopf, v({0, 0}), de, aqg::Leg::Second)));
  CHECK(aqg::slice_delta(g.hopf, v({0, 1}), de, aqg::Leg::First) ==
        aqg::multiplier_from_element(g.algebra(), v({0, 1})));
  for (const auto& name : kModels) {
    const auto& q = qg(name);
    for (std::size_t a = 0; a < q.dim(); ++a) {
      const Vec x = q.algebra().basis(a);
      CHECK(aqg::slice_delta_element(q.hopf, q.hopf.counit, x, aqg::Leg::First) == x);
      CHECK(aqg::slice_delta_element(q.hopf, q.hopf.counit, x, aqg::Leg::Second) == x);
      CHECK(aqg::slice_delta(q.hopf, q.phi, x, aqg::Leg::Second) ==
            aqg::multiplier_from_element(q.algebra(), q.phi[a] * aqg::local_unit(q.algebra())));
    }
  }
}
