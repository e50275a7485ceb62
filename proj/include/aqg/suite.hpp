#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aqg/corep.hpp"
#include "aqg/spec_io.hpp"

namespace aqg {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int samples = 100;  // random functionals per duality lemma
  bool dual = true;
  bool universal = true;
};

// Axioms of a multiplier Hopf algebra whose counit and antipode are already derived.
void run_structure_checks(const MultiplierHopf& h, Report& r);
void run_counit_antipode_checks(const MultiplierHopf& h, Report& r);

// Builds the quantum group step by step, recording each stage; returns nothing once a
// stage fails so that dependent checks are not attempted.
std::optional<QuantumGroup> run_quantum_group_stage(const AlgebraSpec& spec, Report& r);

// Every check on a validated spec: axioms, counit, antipode, integrals, modular data,
// the dual and its own suite, biduality, the universal corepresentation.
Report run_full_suite(const AlgebraSpec& spec, const SuiteOptions& options = {});

// Command layer shared by the C API and the tool. status: 0 pass, 2 falsified.
// Input problems propagate as aqg::Error with an input error code.
struct CommandOutput {
  int status = 0;
  std::string text;
};
CommandOutput cmd_check(const AlgebraSpec& spec, bool json, const SuiteOptions& options = {});
CommandOutput cmd_haar(const AlgebraSpec& spec, bool json, bool check);
CommandOutput cmd_dual(const AlgebraSpec& spec);
CommandOutput cmd_bidual(const AlgebraSpec& spec, bool verify, bool json);
CommandOutput cmd_universal(const AlgebraSpec& spec, bool json);
CommandOutput cmd_corep_verify(const AlgebraSpec& spec, const std::string& corep_json, const ParseOptions& options,
                               bool json);

// Validated quantum group or Error(AxiomViolation) naming the first failing check.
QuantumGroup quantum_group_of(const AlgebraSpec& spec);
AlgebraSpec spec_of(const QuantumGroup& g, const std::string& name);

}  // namespace aqg
