#pragma once

#include <cstdint>

#include "aqg/haar.hpp"

namespace aqg {

// The dual built on the generators w_i = phi e_i, i.e. w_i(x) = phi(e_i x).
// Its structure constants, comultiplication and star are computed from A;
// counit, antipode and integrals are then derived natively on the dual.
struct DualQG {
  QuantumGroup qg;
  Matrix gram;       // gram(i, j) = w_i(e_j) = phi(e_i e_j)
  Matrix to_coords;  // functional on A (as values on e_j) -> generator coordinates
};

DualQG build_dual(const QuantumGroup& g);

Vec dual_coords(const DualQG& d, const Vec& functional);
Vec dual_functional(const DualQG& d, const Vec& coords);

// Product of functionals on A, evaluated by both slicing formulas
// t1((i (x) t2)Delta(x)) and t2((t1 (x) i)Delta(x)); throws ConvolutionMismatch.
Vec convolve(const QuantumGroup& g, const Vec& t1, const Vec& t2);
// t belongs to the multiplier algebra of the dual when both slices of every Delta(e_a) lie in A.
bool mdual_member(const QuantumGroup& g, const Vec& t);

// The four generator families phi a, a phi, psi a, a psi as functionals.
Vec phi_a(const QuantumGroup& g, const Vec& a);
Vec a_phi(const QuantumGroup& g, const Vec& a);
Vec psi_a(const QuantumGroup& g, const Vec& a);
Vec a_psi(const QuantumGroup& g, const Vec& a);

// Closed forms on the dual, in generator coordinates.
Vec dual_counit_closed(const QuantumGroup& g);                     // eps^(phi a) = phi(a)
Matrix dual_antipode_closed(const QuantumGroup& g, const DualQG& d);  // S^(w) = w o S
Vec dual_left_haar_closed(const QuantumGroup& g, const DualQG& d);    // phi^(psi a) = eps(a)
Vec dual_right_haar_closed(const QuantumGroup& g, const DualQG& d);   // psi^(a phi) = eps(a)
// w^*(x) = conj(w(S(x)^*)), column i = coordinates of w_i^*.
Matrix dual_star_matrix(const QuantumGroup& g, const Matrix& gram, const Matrix& to_coords);

// x -> (w -> w(x)) from A into the dual of the dual, in generator coordinates.
Matrix bidual_map(const DualQG& d, const DualQG& dd);

// Convolution formulas, comultiplication routes, closed forms, the lemma
// identities on basis elements and `samples` random functionals.
void run_duality_checks(const QuantumGroup& g, const DualQG& d, Report& r, std::uint64_t seed, int samples);
void run_bidual_checks(const QuantumGroup& g, const DualQG& d, const DualQG& dd, Report& r);

}  // namespace aqg
