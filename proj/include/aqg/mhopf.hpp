#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aqg/algebra.hpp"

namespace aqg {

// Delta(e_i) as a multiplier of A (x) A.
using Comultiplication = std::vector<Multiplier>;

enum class Leg { First, Second };

// Index 0..3 holds the maps
//   a (x) b -> Delta(a)(b (x) 1), Delta(a)(1 (x) b), (b (x) 1)Delta(a), (1 (x) b)Delta(a)
// with column a * n + b.
struct TMaps {
  std::array<Matrix, 4> forward;
  std::array<std::optional<Matrix>, 4> inverse;
  std::array<std::string, 4> failure;  // empty when the map is a bijection of A (x) A
  bool regular() const;
};

struct MultiplierHopf {
  Algebra algebra;
  Algebra square;  // A (x) A
  Comultiplication delta;
  ElementRecovery recover;
  ElementRecovery recover_square;
  TMaps t;
  Vec unit;  // two-sided local unit for the whole basis
  Matrix delta_elements;  // column a = Delta(e_a)(c (x) c) with c = unit, i.e. Delta(e_a) itself
  Vec counit;
  Matrix antipode;
  Matrix antipode_inv;

  std::size_t dim() const { return algebra.dim(); }
};

// Builds everything up to the T-maps without deriving counit or antipode.
MultiplierHopf prepare_multiplier_hopf(Algebra a, Comultiplication delta);
// Fully validated construction; throws on the first failing axiom.
MultiplierHopf make_multiplier_hopf(Algebra a, Comultiplication delta);

Verdict check_delta_multipliers(const MultiplierHopf& h);
Verdict check_delta_homomorphism(const MultiplierHopf& h);
Verdict check_delta_star(const MultiplierHopf& h);
Verdict check_t_map(const MultiplierHopf& h, int index);
Verdict check_coassociativity(const MultiplierHopf& h);

Vec derive_counit(const MultiplierHopf& h);                              // throws NoCounit
std::pair<Matrix, Matrix> derive_antipode(const MultiplierHopf& h);      // throws NoAntipode
Verdict check_counit_laws(const MultiplierHopf& h);
Verdict check_counit_multiplicative(const MultiplierHopf& h);
Verdict check_antipode_laws(const MultiplierHopf& h);
Verdict check_antipode_antimultiplicative(const MultiplierHopf& h);
Verdict check_antipode_comultiplication(const MultiplierHopf& h);  // flip (S (x) S) Delta = Delta S

Multiplier delta_of(const MultiplierHopf& h, const Vec& a);
Multiplier extend_delta(const MultiplierHopf& h, const Multiplier& m);  // Delta on M(A)
Scalar extend_counit(const MultiplierHopf& h, const Multiplier& m);
Multiplier extend_antipode(const MultiplierHopf& h, const Multiplier& m);

// (w (x) i)Delta(a) for leg First, (i (x) w)Delta(a) for leg Second, as multipliers of A.
Multiplier slice_delta(const MultiplierHopf& h, const Vec& w, const Vec& a, Leg leg);
Vec slice_delta_element(const MultiplierHopf& h, const Vec& w, const Vec& a, Leg leg);

// (Delta (x) i)(V) on A (x) A (x) B and (i (x) Delta)(W) on B (x) A (x) A.
Multiplier comultiply_first_leg(const MultiplierHopf& h, const Multiplier& v, std::size_t dim_b);
Multiplier comultiply_last_leg(const MultiplierHopf& h, const Multiplier& w, std::size_t dim_b);

// Tensor helpers on X1 (x) X2 (x) ... with the given factor dimensions.
Vec apply_on_leg(const Matrix& m, const Vec& x, const std::vector<std::size_t>& dims, std::size_t leg);
Vec contract_first(const Vec& w, const Vec& z, std::size_t dim_rest);   // (w (x) i)(z)
Vec contract_second(const Vec& z, const Vec& w, std::size_t dim_first);  // (i (x) w)(z)
// Embeds a multiplier of the two kept legs of a triple tensor, identity on leg `skip`.
Multiplier leg_embed(const Multiplier& m, const std::array<std::size_t, 3>& dims, std::size_t skip);

}  // namespace aqg
