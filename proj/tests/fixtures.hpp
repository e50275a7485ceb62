#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqg/corep.hpp"
#include "aqg/error.hpp"
#include "aqg/models.hpp"
#include "aqg/spec_io.hpp"
#include "aqg/suite.hpp"

namespace fx {

using aqg::Algebra;
using aqg::Corepresentation;
using aqg::Matrix;
using aqg::Multiplier;
using aqg::Scalar;
using aqg::Vec;

// Everything derived once per model and shared by the tests of one binary.
struct Model {
  std::string name;
  aqg::AlgebraSpec spec;
  aqg::QuantumGroup g;
  aqg::DualQG d;
  aqg::DualQG dd;
  Corepresentation u;
  Vec u_element;

  const Algebra& algebra() const { return g.algebra(); }
  const Algebra& dual() const { return d.qg.algebra(); }
};

inline const Model& model(const std::string& name) {
  static std::map<std::string, Model> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  Model m;
  m.name = name;
  m.spec = aqg::parse_spec(aqg::model_spec(name));
  m.g = aqg::make_quantum_group(m.spec.algebra, m.spec.delta);
  m.d = aqg::build_dual(m.g);
  m.dd = aqg::build_dual(m.d.qg);
  m.u = aqg::build_universal(m.g, m.d);
  m.u_element = aqg::universal_element(m.g, m.d);
  return cache.emplace(name, std::move(m)).first->second;
}

inline const std::vector<std::string>& acceptance_models() {
  static const std::vector<std::string> names{"fun_c2", "fun_c4", "fun_s3", "grp_c2", "grp_c4", "grp_s3", "sweedler"};
  return names;
}

inline const std::vector<std::string>& group_models() {
  static const std::vector<std::string> names{"fun_c2", "fun_c4", "fun_s3", "grp_c2", "grp_c4", "grp_s3"};
  return names;
}

inline bool is_function_model(const std::string& name) { return name.rfind("fun_", 0) == 0; }
inline bool is_group_model(const std::string& name) { return name.rfind("grp_", 0) == 0; }

inline aqg::GroupTable group_of(const std::string& name) {
  const std::string tag = name.substr(4);
  if (tag == "c2") return aqg::GroupTable::cyclic(2);
  if (tag == "c4") return aqg::GroupTable::cyclic(4);
  if (tag == "s3") return aqg::GroupTable::symmetric3();
  return aqg::GroupTable::trivial();
}

// ---- small target algebras ----

inline Algebra scalars() {
  Algebra c = Algebra::from_triples(1, {{0, 0, 0, Scalar(1)}});
  c.set_star(Matrix::identity(1));
  return c;
}

// 2x2 matrices on E_rc at index 2r + c; E_rc^* = E_cr.
inline Algebra matrices2() {
  Algebra m(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t d = 0; d < 2; ++d) m.add_structure_constant(2 * r + c, 2 * c + d, 2 * r + d, Scalar(1));
  Matrix star(4, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) star(2 * c + r, 2 * r + c) = Scalar(1);
  m.set_star(star);
  return m;
}

using Mat2 = std::array<Scalar, 4>;  // row-major

inline Vec vec_of(const Mat2& m) { return Vec(m.begin(), m.end()); }

inline Mat2 mul2(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 inv2(const Mat2& a) {
  const Scalar det = a[0] * a[3] - a[1] * a[2];
  return {a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};
}

// V = sum_k e_k (x) z_k from its element coordinates on A (x) B.
inline Corepresentation corep_of_element(const Algebra& a, const Algebra& b, const Vec& z) {
  return Corepresentation(b, aqg::multiplier_from_element(aqg::tensor(a, b), z));
}

// V = sum_s delta_s (x) rep(s) for a representation of the group of a function model.
inline Corepresentation function_corep(const Model& m, const std::vector<Mat2>& rep) {
  const std::size_t n = m.algebra().dim();
  Vec z = aqg::zero_vec(n * 4);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t k = 0; k < 4; ++k) z[s * 4 + k] = rep[s][k];
  return corep_of_element(m.algebra(), matrices2(), z);
}

// Diagonal characters: C_n by s -> diag(1, w^s) with w = -1 or i; S3 by s -> diag(1, sign(s)).
inline std::vector<Mat2> unitary_rep(const std::string& name) {
  auto grp = group_of(name);
  std::vector<Mat2> rep;
  if (name.ends_with("s3")) {
    std::array<int, 3> p{0, 1, 2};
    do {
      int inversions = 0;
      for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y) inversions += p[x] > p[y];
      rep.push_back({Scalar(1), Scalar(0), Scalar(0), Scalar(inversions % 2 ? -1 : 1)});
    } while (std::next_permutation(p.begin(), p.end()));
    return rep;
  }
  const Scalar root = grp.order() == 4 ? Scalar(0, 1) : Scalar(-1);
  Scalar power(1);
  for (std::size_t s = 0; s < grp.order(); ++s) {
    rep.push_back({Scalar(1), Scalar(0), Scalar(0), power});
    power *= root;
  }
  return rep;
}

// A non-unitary faithful representation: the integer standard representation for S3
// (on e0 - e2, e1 - e2), the diagonal character conjugated by [[1,1],[0,1]] otherwise.
inline std::vector<Mat2> nonunitary_rep(const std::string& name) {
  std::vector<Mat2> rep;
  if (name.ends_with("s3")) {
    std::array<int, 3> p{0, 1, 2};
    do {
      // column j is P b_j with b_0 = e0 - e2, b_1 = e1 - e2, read in the (x0, x1) coordinates
      Mat2 r{};
      for (int j = 0; j < 2; ++j) {
        std::array<long, 3> v{0, 0, 0};
        v[p[j]] += 1;
        v[p[2]] -= 1;
        r[0 * 2 + j] = Scalar(v[0]);
        r[1 * 2 + j] = Scalar(v[1]);
      }
      rep.push_back(r);
    } while (std::next_permutation(p.begin(), p.end()));
    return rep;
  }
  const Mat2 u{Scalar(1), Scalar(1), Scalar(0), Scalar(1)};
  for (const auto& r : unitary_rep(name)) rep.push_back(mul2(mul2(u, r), inv2(u)));
  return rep;
}

// lambda_s (x) p + lambda_t (x) (1 - p) for an idempotent p of M2.
inline Corepresentation group_corep(const Model& m, std::size_t s, std::size_t t, const Mat2& p) {
  const std::size_t n = m.algebra().dim();
  Vec z = aqg::zero_vec(n * 4);
  const Mat2 q{Scalar(1) - p[0], -p[1], -p[2], Scalar(1) - p[3]};
  for (std::size_t k = 0; k < 4; ++k) {
    z[s * 4 + k] += p[k];
    z[t * 4 + k] += q[k];
  }
  return corep_of_element(m.algebra(), matrices2(), z);
}

inline const Mat2 kDiagonalProjection{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
inline const Mat2 kSkewProjection{Scalar(1), Scalar(1), Scalar(0), Scalar(0)};  // idempotent, not self-adjoint

// Sweedler: g (x) E11 + x (x) E12 + 1 (x) E22 on the basis {1, g, x, gx}.
inline Corepresentation sweedler_corep(const Model& m) {
  Vec z = aqg::zero_vec(16);
  z[1 * 4 + 0] = Scalar(1);
  z[2 * 4 + 1] = Scalar(1);
  z[0 * 4 + 3] = Scalar(1);
  return corep_of_element(m.algebra(), matrices2(), z);
}

// ---- elements of a target algebra ----

inline Vec unit_of(const Algebra& b) { return aqg::local_unit(b); }

inline std::optional<Vec> inverse_of(const Algebra& b, const Vec& x) {
  auto inv = aqg::try_invert(b.left_multiplication(x));
  if (!inv) return std::nullopt;
  return inv->apply(unit_of(b));
}

inline bool is_central(const Algebra& b, const Vec& x) {
  return b.left_multiplication(x) == b.right_multiplication(x);
}

// Square root in Q(i) of a rational, when it exists.
inline std::optional<Scalar> rational_sqrt(const mpq_class& q) {
  mpq_class a = abs(q);
  if (mpz_perfect_square_p(a.get_num_mpz_t()) == 0 || mpz_perfect_square_p(a.get_den_mpz_t()) == 0) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), a.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), a.get_den_mpz_t());
  mpq_class r(num, den);
  r.canonicalize();
  return sgn(q) >= 0 ? Scalar(r) : Scalar(mpq_class(0), r);
}

// Idempotents other than 0 and 1 obtained from basis elements b with b^2 = c b or b^2 = c 1.
inline std::vector<Vec> proper_idempotents(const Algebra& b) {
  const Vec one = unit_of(b);
  std::vector<Vec> out;
  auto keep = [&](const Vec& e) {
    if (e != one && !aqg::is_zero(e) && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const Vec x = b.basis(i);
    const Vec sq = b.multiply(x, x);
    if (!aqg::is_zero(sq) && !aqg::is_zero(x)) {
      const Scalar c = sq[i];
      if (!c.is_zero() && sq == c * x) keep(c.inverse() * x);
    }
    std::size_t j = 0;
    while (one[j].is_zero()) ++j;
    const Scalar c = sq[j] / one[j];
    if (c.is_zero() || !c.is_real() || sq != c * one) continue;
    if (auto root = rational_sqrt(c.re())) {
      const Vec y = root->inverse() * x;
      keep(Scalar(mpq_class(1, 2)) * (one + y));
      keep(Scalar(mpq_class(1, 2)) * (one - y));
    }
  }
  return out;
}

inline Vec random_element(std::mt19937_64& rng, std::size_t n, int spread = 2) {
  std::uniform_int_distribution<int> pick(-spread, spread);
  Vec v(n);
  for (auto& x : v) {
    mpq_class im(pick(rng), 2);
    im.canonicalize();
    x = Scalar(mpq_class(pick(rng)), im);
  }
  return v;
}

inline Vec random_invertible(std::mt19937_64& rng, const Algebra& b) {
  for (;;) {
    Vec u = random_element(rng, b.dim());
    if (inverse_of(b, u)) return u;
  }
}

inline Multiplier leg2(std::size_t dim_a, const Algebra& b, const Vec& x) {
  return aqg::kron(aqg::identity_multiplier(dim_a), aqg::multiplier_from_element(b, x));
}

// (1 (x) u) V (1 (x) u^-1).
inline Corepresentation conjugate(const Algebra& a, const Corepresentation& c, const Vec& u) {
  const Vec inv = *inverse_of(c.target, u);
  return Corepresentation(c.target, leg2(a.dim(), c.target, u) * c.v * leg2(a.dim(), c.target, inv));
}

// Corepresentations of A on B = dual, mixing invertible and degenerate families.
struct LabelledCorep {
  std::string label;
  Corepresentation c;
};

inline std::vector<LabelledCorep> random_coreps(const Model& m, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Algebra& a = m.algebra();
  const Algebra& b = m.dual();
  const Vec one = unit_of(b);
  const auto idempotents = proper_idempotents(b);
  std::vector<Vec> central;
  for (const auto& e : idempotents)
    if (is_central(b, e)) central.push_back(e);
  std::vector<LabelledCorep> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    switch (k % 5) {
      case 0:
        out.push_back({"conjugated U", conjugate(a, m.u, random_invertible(rng, b))});
        break;
      case 1:
        if (idempotents.empty()) break;
        out.push_back({"1 (x) e", Corepresentation(b, leg2(a.dim(), b, idempotents[rng() % idempotents.size()]))});
        break;
      case 2:
        out.push_back({"zero", Corepresentation(b, aqg::zero_multiplier(a.dim() * b.dim()))});
        break;
      case 3: {
        if (idempotents.empty()) break;
        Corepresentation e(b, leg2(a.dim(), b, idempotents[rng() % idempotents.size()]));
        out.push_back({"conjugated 1 (x) e", conjugate(a, e, random_invertible(rng, b))});
        break;
      }
      case 4:
        if (central.empty()) {
          out.push_back({"conjugated U", conjugate(a, m.u, random_invertible(rng, b))});
          break;
        }
        out.push_back({"U(1 (x) z)", Corepresentation(b, m.u.v * leg2(a.dim(), b, central[rng() % central.size()]))});
        break;
    }
  }
  return out;
}

// The identity of the dual as a homomorphism into its own multiplier algebra.
inline aqg::DualHomomorphism identity_hom(const Model& m) {
  aqg::DualHomomorphism t{m.dual(), {}};
  for (std::size_t i = 0; i < m.dual().dim(); ++i)
    t.images.push_back(aqg::multiplier_from_element(m.dual(), m.dual().basis(i)));
  return t;
}

// The dual counit as a homomorphism into the scalars.
inline aqg::DualHomomorphism counit_hom(const Model& m) {
  aqg::DualHomomorphism t{scalars(), {}};
  for (const auto& c : m.d.qg.hopf.counit) t.images.push_back(aqg::multiplier_from_element(t.target, Vec{c}));
  return t;
}

// Coordinates of a generator w_i as a functional on A.
inline Vec generator_functional(const Model& m, std::size_t i) { return m.d.gram.row(i); }


// One coefficient of the structure constants or of some Delta(e_a) changed by a nonzero amount.
struct Corruption {
  std::string text;
  std::string description;
};

inline Corruption corrupt_spec(const std::string& spec_text, std::mt19937_64& rng) {
  auto root = nlohmann::ordered_json::parse(spec_text);
  const std::size_t n = root.at("dim").get<std::size_t>();
  static const std::array<Scalar, 5> shifts{Scalar(1), Scalar(-1), Scalar(2), Scalar(mpq_class(1, 2)), Scalar(0, 1)};
  const Scalar shift = shifts[rng() % shifts.size()];
  const bool in_sc = rng() % 2 == 0;
  if (in_sc) {
    const std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    auto& sc = root.at("sc");
    bool found = false;
    for (auto& e : sc)
      if (e[0].get<std::size_t>() == i && e[1].get<std::size_t>() == j && e[2].get<std::size_t>() == k) {
        e[3] = (Scalar::parse(e[3].get<std::string>()) + shift).str();
        found = true;
      }
    if (!found) sc.push_back({i, j, k, shift.str()});
    return {root.dump(1), "sc(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ") += " +
                              shift.str()};
  }
  auto& tensor = root.at("delta").at("tensor");
  auto& entry = tensor[rng() % tensor.size()];
  const std::size_t pos = rng() % (n * n);
  auto& c = entry[1][pos];
  c = (Scalar::parse(c.get<std::string>()) + shift).str();
  return {root.dump(1), "Delta(e" + std::to_string(entry[0].get<std::size_t>()) + ")[" + std::to_string(pos) +
                            "] += " + shift.str()};
}

// First failing entry, or null when every check passed.
inline const aqg::CheckEntry* first_failure(const aqg::Report& r) {
  for (const auto& e : r.entries())
    if (e.status == aqg::Status::Fail) return &e;
  return nullptr;
}

}  // namespace fx
