// Command line front end; talks to the library only through the C interface.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "aqg/aqg.h"

namespace {

struct SpecDeleter {
  void operator()(aqg_spec* s) const { aqg_spec_free(s); }
};
using SpecHandle = std::unique_ptr<aqg_spec, SpecDeleter>;

int finish(aqg_status status, char*& out) {
  if (out) {
    std::fputs(out, stdout);
    aqg_string_free(out);
  }
  if (status != AQG_OK && *aqg_last_error()) std::fprintf(stderr, "aqg: %s\n", aqg_last_error());
  return static_cast<int>(status);
}

// Loads a spec from a path or "-"; prints the error and returns null on failure.
SpecHandle load(const std::string& path, std::size_t max_dim, int& status) {
  aqg_spec* raw = nullptr;
  aqg_status s = aqg_spec_load_file(path.c_str(), max_dim, &raw);
  status = static_cast<int>(s);
  if (s != AQG_OK) std::fprintf(stderr, "aqg: %s\n", aqg_last_error());
  return SpecHandle(raw);
}

bool read_file(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  text = os.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks algebraic quantum groups given by structure constants, exactly over Q(i)."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(aqg_version()));

  std::size_t max_dim = 64;
  bool as_json = false;
  std::string spec_path, corep_path, model_name;
  bool haar_check = false, bidual_verify = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "spec JSON file, or - for stdin")->required();
    cmd->add_option("--max-dim", max_dim, "reject algebras of larger dimension")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "run every check and report pass or fail per identity");
  add_common(check);
  check->add_flag("--json", as_json, "machine readable report");

  auto* haar = app.add_subcommand("haar", "print integrals, modular automorphisms, modular element, scaling constant");
  add_common(haar);
  haar->add_flag("--json", as_json, "machine readable output");
  haar->add_flag("--check", haar_check, "also run the axiom, integral and modular checks");

  auto* dual = app.add_subcommand("dual", "emit the spec of the dual");
  add_common(dual);

  auto* bidual = app.add_subcommand("bidual", "emit the spec of the dual of the dual, or verify biduality");
  add_common(bidual);
  bidual->add_flag("--verify", bidual_verify, "check the evaluation map instead of emitting a spec");
  bidual->add_flag("--json", as_json, "machine readable report");

  auto* universal = app.add_subcommand("universal", "print the universal corepresentation and its checks");
  add_common(universal);
  universal->add_flag("--json", as_json, "machine readable output, usable as input to corep verify");

  auto* corep = app.add_subcommand("corep", "corepresentation tools");
  corep->require_subcommand(1);
  auto* verify = corep->add_subcommand("verify", "check a multiplier V of A (x) B");
  add_common(verify);
  verify->add_option("corep", corep_path, "JSON with target algebra and V, or - for stdin")->required();
  verify->add_flag("--json", as_json, "machine readable report");

  auto* model = app.add_subcommand("model", "emit a built-in model spec, or list them");
  model->add_option("name", model_name, "model name; omit to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(AQG_INPUT_ERROR);
  }

  const aqg_format format = as_json ? AQG_FORMAT_JSON : AQG_FORMAT_TEXT;
  char* out = nullptr;

  if (*model) {
    if (model_name.empty()) return finish(aqg_model_names(&out), out);
    return finish(aqg_model_spec(model_name.c_str(), &out), out);
  }

  int status = 0;
  SpecHandle spec = load(spec_path, max_dim, status);
  if (!spec) return status;

  if (*check) return finish(aqg_check(spec.get(), format, &out), out);
  if (*haar) return finish(aqg_haar(spec.get(), format, haar_check ? 1 : 0, &out), out);
  if (*dual) return finish(aqg_dual(spec.get(), &out), out);
  if (*bidual) return finish(aqg_bidual(spec.get(), bidual_verify ? 1 : 0, format, &out), out);
  if (*universal) return finish(aqg_universal(spec.get(), format, &out), out);
  if (*verify) {
    std::string text;
    if (!read_file(corep_path, text)) {
      std::fprintf(stderr, "aqg: cannot open '%s'\n", corep_path.c_str());
      return static_cast<int>(AQG_INPUT_ERROR);
    }
    return finish(aqg_corep_verify(spec.get(), text.c_str(), max_dim, format, &out), out);
  }
  return static_cast<int>(AQG_INPUT_ERROR);
}
