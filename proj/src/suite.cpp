#include "aqg/suite.hpp"

#include <json.hpp>
#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

using json = nlohmann::ordered_json;

namespace {

const char* t_relation(int k) {
  static const char* text[] = {"a (x) b -> Delta(a)(b (x) 1) is a bijection of A (x) A",
                               "a (x) b -> Delta(a)(1 (x) b) is a bijection of A (x) A",
                               "a (x) b -> (b (x) 1)Delta(a) is a bijection of A (x) A",
                               "a (x) b -> (1 (x) b)Delta(a) is a bijection of A (x) A"};
  return text[k];
}

json json_of(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json json_of(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(json_of(m.row(r)));
  return out;
}

json json_of_algebra(const Algebra& a) {
  json out;
  out["dim"] = a.dim();
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) sc.push_back(json::array({i, j, t.index, t.coeff.str()}));
  out["sc"] = std::move(sc);
  if (a.has_star()) out["star"] = json_of(a.star_matrix());
  return out;
}

json report_json(const Report& r) { return json::parse(r.to_json()); }

// Element form when the multiplier comes from A, otherwise the two actions.
json json_of_multiplier(const ElementRecovery& rec, const Multiplier& m) {
  json out;
  if (auto x = rec.from_multiplier(m)) {
    out["element"] = json_of(*x);
  } else {
    out["L"] = json_of(m.left);
    out["R"] = json_of(m.right);
  }
  return out;
}

void run_derived_suite(const QuantumGroup& q, Report& r) {
  r.append(validate_spec(spec_of(q, "")), "");
  run_structure_checks(q.hopf, r);
  run_counit_antipode_checks(q.hopf, r);
  r.run("haar.unique", "left invariant functionals form a one-dimensional space",
        [&] { return compare(solve_left_haar(q.hopf), q.phi, "re-solved phi"); });
  run_modular_checks(q, r);
}

void require_passed(const Report& r) {
  for (const auto& e : r.entries())
    if (e.status == Status::Fail) throw Error(ErrorCode::AxiomViolation, e.id + ": " + e.witness);
}

}  // namespace

void run_structure_checks(const MultiplierHopf& h, Report& r) {
  r.run("delta.homomorphism", "Delta(e_i)Delta(e_j) = Delta(e_i e_j)", [&] { return check_delta_homomorphism(h); });
  if (h.algebra.has_star())
    r.run("delta.star", "Delta(a^*) = Delta(a)^*", [&] { return check_delta_star(h); });
  for (int k = 0; k < 4; ++k)
    r.run("regular.t" + std::to_string(k + 1), t_relation(k), [&] { return check_t_map(h, k); });
  r.run("delta.coassociative", "(Delta (x) i)Delta = (i (x) Delta)Delta", [&] { return check_coassociativity(h); });
}

void run_counit_antipode_checks(const MultiplierHopf& h, Report& r) {
  r.run("counit.laws", "(eps (x) i)(Delta(a)(1 (x) b)) = ab = (i (x) eps)((a (x) 1)Delta(b)) and companions",
        [&] { return check_counit_laws(h); });
  r.run("counit.multiplicative", "eps(ab) = eps(a)eps(b)", [&] { return check_counit_multiplicative(h); });
  r.run("antipode.laws", "m(S (x) i)(Delta(a)(1 (x) b)) = eps(a)b = m(i (x) S)((b (x) 1)Delta(a))",
        [&] { return check_antipode_laws(h); });
  r.run("antipode.antimultiplicative", "S(ab) = S(b)S(a)", [&] { return check_antipode_antimultiplicative(h); });
  r.run("antipode.comultiplication", "flip (S (x) S)Delta(a) = Delta(S(a))",
        [&] { return check_antipode_comultiplication(h); });
}

std::optional<QuantumGroup> run_quantum_group_stage(const AlgebraSpec& spec, Report& r) {
  const std::size_t start = r.failures();
  auto failed = [&] { return r.failures() != start; };
  MultiplierHopf h;
  r.run("regular.prepare", "Delta(a)(b (x) 1) and its companions lie in A (x) A", [&] {
    h = prepare_multiplier_hopf(spec.algebra, spec.delta);
    return Verdict::pass();
  });
  if (failed()) return std::nullopt;
  run_structure_checks(h, r);
  if (failed()) return std::nullopt;
  r.run("counit.derive", "exactly one eps solves the counit equations", [&] {
    h.counit = derive_counit(h);
    return Verdict::pass();
  });
  if (failed()) return std::nullopt;
  r.run("antipode.derive", "exactly one bijective S solves the antipode equations", [&] {
    auto [s, s_inv] = derive_antipode(h);
    h.antipode = std::move(s);
    h.antipode_inv = std::move(s_inv);
    return Verdict::pass();
  });
  if (failed()) return std::nullopt;
  run_counit_antipode_checks(h, r);
  if (spec.counit)
    r.run("counit.declared", "declared counit equals the derived one",
          [&] { return compare(*spec.counit, h.counit, "declared vs derived counit"); });
  if (spec.antipode)
    r.run("antipode.declared", "declared antipode equals the derived one",
          [&] { return compare(*spec.antipode, h.antipode, "declared vs derived antipode"); });
  if (failed()) return std::nullopt;
  r.run("haar.unique", "left invariant functionals form a one-dimensional space", [&] {
    solve_left_haar(h);
    return Verdict::pass();
  });
  if (failed()) return std::nullopt;
  std::optional<QuantumGroup> g;
  r.run("haar.construct", "faithful phi, modular automorphisms, modular element and scaling constant exist", [&] {
    g = make_quantum_group(std::move(h));
    return Verdict::pass();
  });
  if (!g) return std::nullopt;
  run_modular_checks(*g, r);
  if (failed()) return std::nullopt;
  return g;
}

Report run_full_suite(const AlgebraSpec& spec, const SuiteOptions& options) {
  Report r = validate_spec(spec);
  if (!r.passed()) return r;
  auto g = run_quantum_group_stage(spec, r);
  if (!g || !options.dual) return r;
  std::optional<DualQG> d;
  r.run("dual.construct", "w_i w_j, Delta^(w_i) and w_i^* computed on the generators w_i = phi e_i", [&] {
    d = build_dual(*g);
    return Verdict::pass();
  });
  if (!d) return r;
  run_duality_checks(*g, *d, r, options.seed, options.samples);
  Report dual_suite;
  run_derived_suite(d->qg, dual_suite);
  r.append(dual_suite, "dual.suite.");
  std::optional<DualQG> dd;
  r.run("bidual.construct", "the dual of the dual", [&] {
    dd = build_dual(d->qg);
    return Verdict::pass();
  });
  if (!dd) return r;
  run_bidual_checks(*g, *d, *dd, r);
  Report bidual_suite;
  run_derived_suite(dd->qg, bidual_suite);
  r.append(bidual_suite, "bidual.suite.");
  if (options.universal) run_universal_checks(*g, *d, *dd, r);
  return r;
}

QuantumGroup quantum_group_of(const AlgebraSpec& spec) {
  require_passed(validate_spec(spec));
  return make_quantum_group(spec.algebra, spec.delta);
}

AlgebraSpec spec_of(const QuantumGroup& g, const std::string& name) {
  AlgebraSpec s;
  s.name = name;
  s.algebra = g.algebra();
  s.delta = g.hopf.delta;
  return s;
}

CommandOutput cmd_check(const AlgebraSpec& spec, bool as_json, const SuiteOptions& options) {
  Report r = run_full_suite(spec, options);
  return {r.passed() ? 0 : 2, as_json ? r.to_json() : r.to_text()};
}

CommandOutput cmd_haar(const AlgebraSpec& spec, bool as_json, bool check) {
  Report r;
  QuantumGroup g;
  if (check) {
    r = validate_spec(spec);
    std::optional<QuantumGroup> built;
    if (r.passed()) built = run_quantum_group_stage(spec, r);
    if (!built) return {2, as_json ? r.to_json() : r.to_text()};
    g = std::move(*built);
  } else {
    g = quantum_group_of(spec);
  }
  const Algebra& alg = g.algebra();
  json out;
  out["name"] = spec.name;
  out["phi"] = json_of(g.phi);
  out["psi"] = json_of(g.psi);
  out["counit"] = json_of(g.hopf.counit);
  out["antipode"] = json_of(g.hopf.antipode);
  out["rho"] = json_of(g.rho);
  out["rho_prime"] = json_of(g.rho_prime);
  out["delta"] = json_of_multiplier(g.hopf.recover, g.modular);
  out["mu"] = g.mu.str();
  if (check) out["report"] = report_json(r);
  if (as_json) return {r.passed() ? 0 : 2, out.dump(1) + "\n"};
  std::ostringstream os;
  os << "name: " << spec.name << "\n";
  for (std::size_t k = 0; k < alg.dim(); ++k) os << "phi(e" << k << ") = " << g.phi[k].str() << "\n";
  os << "phi = " << to_string(g.phi) << "\n";
  os << "psi = " << to_string(g.psi) << "\n";
  os << "counit = " << to_string(g.hopf.counit) << "\n";
  os << "antipode = " << to_string(g.hopf.antipode) << "\n";
  os << "rho = " << to_string(g.rho) << "\n";
  os << "rho' = " << to_string(g.rho_prime) << "\n";
  if (auto x = g.hopf.recover.from_multiplier(g.modular))
    os << "delta = " << to_string(*x) << "\n";
  else
    os << "delta = multiplier with left action " << to_string(g.modular.left) << "\n";
  os << "mu = " << g.mu.str() << "\n";
  if (check) os << r.to_text();
  return {r.passed() ? 0 : 2, os.str()};
}

CommandOutput cmd_dual(const AlgebraSpec& spec) {
  QuantumGroup g = quantum_group_of(spec);
  DualQG d = build_dual(g);
  return {0, emit_spec(spec_of(d.qg, "dual_" + spec.name))};
}

CommandOutput cmd_bidual(const AlgebraSpec& spec, bool verify, bool as_json) {
  QuantumGroup g = quantum_group_of(spec);
  DualQG d = build_dual(g);
  DualQG dd = build_dual(d.qg);
  if (!verify) return {0, emit_spec(spec_of(dd.qg, "bidual_" + spec.name))};
  Report r;
  run_bidual_checks(g, d, dd, r);
  Report suite;
  run_derived_suite(dd.qg, suite);
  r.append(suite, "bidual.suite.");
  return {r.passed() ? 0 : 2, as_json ? r.to_json() : r.to_text()};
}

CommandOutput cmd_universal(const AlgebraSpec& spec, bool as_json) {
  QuantumGroup g = quantum_group_of(spec);
  DualQG d = build_dual(g);
  DualQG dd = build_dual(d.qg);
  Report r;
  run_universal_checks(g, d, dd, r);
  Multiplier u = construct_universal(g, d);
  ElementRecovery rec(tensor(g.algebra(), d.qg.algebra()));
  auto element = rec.from_multiplier(u);
  const int status = r.passed() ? 0 : 2;
  if (as_json) {
    json out;
    out["name"] = spec.name;
    out["target"] = json_of_algebra(d.qg.algebra());
    out["V"] = json_of_multiplier(rec, u);
    out["report"] = report_json(r);
    return {status, out.dump(1) + "\n"};
  }
  std::ostringstream os;
  const std::size_t m = d.qg.dim();
  if (element) {
    os << "U =";
    bool first = true;
    for (std::size_t k = 0; k < element->size(); ++k) {
      if ((*element)[k].is_zero()) continue;
      os << (first ? " " : " + ") << "(" << (*element)[k].str() << ") e" << k / m << " (x) w" << k % m;
      first = false;
    }
    if (first) os << " 0";
    os << "\n";
  } else {
    os << "U left action = " << to_string(u.left) << "\n";
  }
  os << r.to_text();
  return {status, os.str()};
}

CommandOutput cmd_corep_verify(const AlgebraSpec& spec, const std::string& corep_json, const ParseOptions& options,
                               bool as_json) {
  QuantumGroup g = quantum_group_of(spec);
  CorepInput in = parse_corep_input(corep_json, g.algebra(), options);
  DualQG d = build_dual(g);
  Corepresentation c(std::move(in.target), std::move(in.v));
  Report r;
  run_corep_checks(g, d, c, r);
  return {r.passed() ? 0 : 2, as_json ? r.to_json() : r.to_text()};
}

}  // namespace aqg
