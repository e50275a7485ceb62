#pragma once

#include <optional>
#include <string>

#include "aqg/mhopf.hpp"
#include "aqg/report.hpp"

namespace aqg {

// Input data for one algebra with comultiplication. Counit and antipode, when
// given, are only cross-checked against the derived ones.
struct AlgebraSpec {
  std::string name;
  Algebra algebra;
  Comultiplication delta;
  std::optional<Vec> counit;
  std::optional<Matrix> antipode;
};

struct ParseOptions {
  std::size_t max_dim = 64;
};

// Syntax and shape only; throws Error(ParseError) or Error(DimensionMismatch).
AlgebraSpec parse_spec_unchecked(const std::string& json_text, const ParseOptions& options = {});
// Associativity, non-degeneracy, star axioms and that each Delta(e_i) is a multiplier.
Report validate_spec(const AlgebraSpec& spec);
// Unchecked parse followed by validation; the first failing axiom throws Error(AxiomViolation).
AlgebraSpec parse_spec(const std::string& json_text, const ParseOptions& options = {});

// Deterministic: emit(parse(emit(s))) == emit(s) byte for byte.
std::string emit_spec(const AlgebraSpec& spec);

// Corepresentation input: {"target": {"dim", "sc", "star"?}, "V": {"L", "R"} | {"element"}}
// where V lives on A (x) target with index a * dim(target) + b.
struct CorepInput {
  Algebra target;
  Multiplier v;
};
CorepInput parse_corep_input(const std::string& json_text, const Algebra& a, const ParseOptions& options = {});

std::string read_text(const std::string& path);  // "-" reads stdin; throws ParseError

}  // namespace aqg
