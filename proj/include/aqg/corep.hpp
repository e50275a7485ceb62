#pragma once

#include <random>

#include "aqg/duality.hpp"

namespace aqg {

// A multiplier V of A (x) B together with its target algebra B. Index a * dim(B) + b.
// Non-invertible V is representable; only operations that need an inverse reject it.
struct Corepresentation {
  Algebra target;
  Vec target_unit;
  Multiplier v;

  Corepresentation() = default;
  Corepresentation(Algebra b, Multiplier m);  // throws NoLocalUnit when B has no unit
  std::size_t dim_target() const { return target.dim(); }
};

// A linear map from the dual into M(B), given on the generators w_i.
struct DualHomomorphism {
  Algebra target;
  std::vector<Multiplier> images;
};

// U on A (x) dual from [U(x (x) w)](y) = (i (x) w)(Delta(y)(x (x) 1)) and
// [(x (x) w)U](y) = (w (x) i)((1 (x) x)Delta(y)); no verification.
Multiplier construct_universal(const QuantumGroup& g, const DualQG& d);
// Verified: multiplier, corepresentation, invertible, (w (x) i)(U) = w, (eps (x) i)(U) = 1.
Corepresentation build_universal(const QuantumGroup& g, const DualQG& d);  // throws UniversalConstructionFailure
// sum_k e_k (x) e^k with e^k the coordinate functionals, in A (x) dual coordinates.
Vec universal_element(const QuantumGroup& g, const DualQG& d);
// U read back as an element of A (x) dual through its left and right actions.
Vec universal_as_element(const QuantumGroup& g, const DualQG& d, const Multiplier& u);  // throws UniversalConstructionFailure

Verdict check_corep(const QuantumGroup& g, const Corepresentation& c);
bool is_corep(const QuantumGroup& g, const Corepresentation& c);

// A functional on A written as sum_t a_t w_t, with (a w)(x) = w(x a).
using Decomposition = std::vector<std::pair<Vec, Vec>>;
// (w (x) i)(V) as a multiplier of B: left action x -> sum_t (w_t (x) i)(V(a_t (x) x)).
Multiplier slice(const QuantumGroup& g, const Corepresentation& c, const Decomposition& w);
Multiplier slice(const QuantumGroup& g, const Corepresentation& c, const Vec& w);

DualHomomorphism pi_of(const QuantumGroup& g, const Corepresentation& c);
Multiplier hom_apply(const DualHomomorphism& t, const Vec& coords);  // image of sum_i coords_i w_i
Verdict check_homomorphism(const DualQG& d, const DualHomomorphism& t);
Verdict check_star_preserving(const DualQG& d, const DualHomomorphism& t);
// t(dual)B = B t(dual) = B as spans.
bool hom_nondegenerate(const DualHomomorphism& t);

// (i (x) t)(U) applied term by term to the element form of U; no checks.
Corepresentation apply_to_universal(const QuantumGroup& g, const Vec& u_element, const DualHomomorphism& t);
// Checked version: t must be multiplicative and non-degenerate.
Corepresentation corep_from_hom(const QuantumGroup& g, const DualQG& d, const Vec& u_element,
                                const DualHomomorphism& t);  // throws DegenerateHomomorphism

// (S (x) i)(V)(a (x) b) = (S (x) i)((S^-1(a) (x) 1)V(1 (x) b)), right action symmetric.
Multiplier antipode_slice(const QuantumGroup& g, const Corepresentation& c);

struct NondegeneracyTriple {
  bool invertible = false;
  bool pi_nondegenerate = false;
  bool spans_full = false;  // V(A (x) B) = (A (x) B)V = A (x) B
  bool agree() const { return invertible == pi_nondegenerate && pi_nondegenerate == spans_full; }
};
NondegeneracyTriple nondegeneracy_triple(const QuantumGroup& g, const Corepresentation& c);
// A (x) B is spanned by (a (x) 1)X(1 (x) b) and by (1 (x) b)X(a (x) 1) for X = V and X = V^-1.
Verdict check_sandwich_spans(const QuantumGroup& g, const Corepresentation& c);

Verdict check_unitary(const QuantumGroup& g, const Corepresentation& c);  // V^*V = VV^* = 1

// Both sides of (i (x) Delta^)(U) = U12 U13.
Verdict check_dual_comultiplication(const QuantumGroup& g, const DualQG& d, const Multiplier& u);
// flip(U) equals the universal corepresentation of the dual, read through the evaluation map.
Verdict check_flip_universal(const QuantumGroup& g, const DualQG& d, const DualQG& dd, const Multiplier& u);

void run_universal_checks(const QuantumGroup& g, const DualQG& d, const DualQG& dd, Report& r);
// Verification report for an arbitrary V; hypotheses that fail mark dependent checks as skipped.
void run_corep_checks(const QuantumGroup& g, const DualQG& d, const Corepresentation& c, Report& r,
                      std::uint64_t seed = 1);

}  // namespace aqg
