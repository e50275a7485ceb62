#include "aqg/aqg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "aqg/error.hpp"
#include "aqg/models.hpp"
#include "aqg/suite.hpp"

struct aqg_spec {
  aqg::AlgebraSpec spec;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

aqg_status status_of(const aqg::Error& e) {
  return aqg::is_input_error(e.code()) ? AQG_INPUT_ERROR : AQG_FALSIFIED;
}

// Runs body with exceptions mapped to status codes; body returns the status on success.
template <class F>
aqg_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const aqg::Error& e) {
    last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return AQG_INTERNAL_ERROR;
  } catch (...) {
    last_error = "internal: unknown exception";
    return AQG_INTERNAL_ERROR;
  }
}

aqg_status emit(const aqg::CommandOutput& out, char** dest) {
  *dest = duplicate(out.text);
  if (!*dest) {
    last_error = "internal: out of memory";
    return AQG_INTERNAL_ERROR;
  }
  if (out.status != 0) last_error = "falsified: see report";
  return out.status == 0 ? AQG_OK : AQG_FALSIFIED;
}

bool null_args(const void* a, const void* b) {
  if (a && b) return false;
  last_error = "null argument";
  return true;
}

aqg::ParseOptions options_of(size_t max_dim) {
  aqg::ParseOptions o;
  if (max_dim > 0) o.max_dim = max_dim;
  return o;
}

}  // namespace

extern "C" {

aqg_status aqg_spec_load_string(const char* json_text, size_t max_dim, aqg_spec** out) {
  if (null_args(json_text, out)) return AQG_INPUT_ERROR;
  *out = nullptr;
  return guarded([&] {
    *out = new aqg_spec{aqg::parse_spec_unchecked(json_text, options_of(max_dim))};
    return AQG_OK;
  });
}

aqg_status aqg_spec_load_file(const char* path, size_t max_dim, aqg_spec** out) {
  if (null_args(path, out)) return AQG_INPUT_ERROR;
  *out = nullptr;
  return guarded([&] {
    *out = new aqg_spec{aqg::parse_spec_unchecked(aqg::read_text(path), options_of(max_dim))};
    return AQG_OK;
  });
}

void aqg_spec_free(aqg_spec* spec) { delete spec; }

size_t aqg_spec_dim(const aqg_spec* spec) { return spec ? spec->spec.algebra.dim() : 0; }

aqg_status aqg_check(const aqg_spec* spec, aqg_format format, char** report) {
  if (null_args(spec, report)) return AQG_INPUT_ERROR;
  *report = nullptr;
  return guarded([&] { return emit(aqg::cmd_check(spec->spec, format == AQG_FORMAT_JSON), report); });
}

aqg_status aqg_haar(const aqg_spec* spec, aqg_format format, int run_checks, char** out) {
  if (null_args(spec, out)) return AQG_INPUT_ERROR;
  *out = nullptr;
  return guarded([&] { return emit(aqg::cmd_haar(spec->spec, format == AQG_FORMAT_JSON, run_checks != 0), out); });
}

aqg_status aqg_dual(const aqg_spec* spec, char** spec_json) {
  if (null_args(spec, spec_json)) return AQG_INPUT_ERROR;
  *spec_json = nullptr;
  return guarded([&] { return emit(aqg::cmd_dual(spec->spec), spec_json); });
}

aqg_status aqg_bidual(const aqg_spec* spec, int verify, aqg_format format, char** out) {
  if (null_args(spec, out)) return AQG_INPUT_ERROR;
  *out = nullptr;
  return guarded([&] { return emit(aqg::cmd_bidual(spec->spec, verify != 0, format == AQG_FORMAT_JSON), out); });
}

aqg_status aqg_universal(const aqg_spec* spec, aqg_format format, char** out) {
  if (null_args(spec, out)) return AQG_INPUT_ERROR;
  *out = nullptr;
  return guarded([&] { return emit(aqg::cmd_universal(spec->spec, format == AQG_FORMAT_JSON), out); });
}

aqg_status aqg_corep_verify(const aqg_spec* spec, const char* corep_json, size_t max_dim, aqg_format format,
                            char** out) {
  if (null_args(spec, out) || null_args(corep_json, out)) return AQG_INPUT_ERROR;
  *out = nullptr;
  return guarded([&] {
    return emit(aqg::cmd_corep_verify(spec->spec, corep_json, options_of(max_dim), format == AQG_FORMAT_JSON), out);
  });
}

aqg_status aqg_model_spec(const char* name, char** spec_json) {
  if (null_args(name, spec_json)) return AQG_INPUT_ERROR;
  *spec_json = nullptr;
  return guarded([&] { return emit({0, aqg::model_spec(name)}, spec_json); });
}

aqg_status aqg_model_names(char** names) {
  if (null_args(names, names)) return AQG_INPUT_ERROR;
  *names = nullptr;
  return guarded([&] {
    std::string all;
    for (const auto& n : aqg::model_names()) all += n + "\n";
    return emit({0, all}, names);
  });
}

void aqg_string_free(char* s) { std::free(s); }

const char* aqg_last_error(void) { return last_error.c_str(); }

const char* aqg_version(void) { return "1.0.0"; }

}  // extern "C"
