#pragma once

#include "aqg/mhopf.hpp"
#include "aqg/report.hpp"

namespace aqg {

// A regular multiplier Hopf algebra with its integrals and modular data.
struct QuantumGroup {
  MultiplierHopf hopf;
  Vec phi;                // left invariant, first nonzero coordinate 1 (or self-adjoint)
  Vec psi;                // phi o S, right invariant
  Matrix rho;             // phi(ab) = phi(b rho(a))
  Matrix rho_prime;       // psi(ab) = psi(b rho'(a))
  Multiplier modular;     // delta: (phi (x) i)(Delta(a)(1 (x) b)) = phi(a) delta b
  Multiplier modular_inv;
  Scalar mu;              // phi o S^2 = mu phi

  const Algebra& algebra() const { return hopf.algebra; }
  std::size_t dim() const { return hopf.dim(); }
};

// Unique up to scalar; throws NoHaar when only 0 solves, NonUniqueHaar when the
// solution space has dimension > 1.
Vec solve_left_haar(const MultiplierHopf& h);
Vec right_haar(const MultiplierHopf& h, const Vec& phi);
Matrix modular_automorphism(const Algebra& a, const Vec& w);  // throws NotFaithful
std::pair<Multiplier, Multiplier> modular_element(const MultiplierHopf& h, const Vec& phi);
Scalar scaling_constant(const MultiplierHopf& h, const Vec& phi);  // throws NotProportional

QuantumGroup make_quantum_group(MultiplierHopf h);
QuantumGroup make_quantum_group(Algebra a, Comultiplication delta);

Verdict check_left_invariance(const MultiplierHopf& h, const Vec& phi);
Verdict check_right_invariance(const MultiplierHopf& h, const Vec& psi);
Verdict check_faithful(const Algebra& a, const Vec& w, const std::string& name);
Verdict check_kms(const Algebra& a, const Vec& w, const Matrix& sigma, const std::string& name);
Verdict check_automorphism(const Algebra& a, const Matrix& sigma, const std::string& name);
Verdict check_self_adjoint(const Algebra& a, const Vec& w, const std::string& name);

// Every relation among S, rho, rho', delta, mu, phi, psi; one entry per relation.
void run_modular_checks(const QuantumGroup& g, Report& report);

}  // namespace aqg
