#include "aqg/spec_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Scalar scalar_of(const json& j, const std::string& where) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad(where + ": scalar must be a string like \"1/2-3/4i\" or an integer");
}

std::size_t index_of(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) bad(where + ": expected an index");
  auto v = j.get<std::size_t>();
  if (v >= bound) bad(where + ": index " + std::to_string(v) + " out of range");
  return v;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Vec vec_of(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where + ": expected " + std::to_string(n) + " scalars");
  Vec v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = scalar_of(j[k], where);
  return v;
}

Matrix matrix_of(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) bad(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec_of(j[r], cols, where);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
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

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Algebra algebra_of(const json& root, const ParseOptions& options) {
  const json& dim_j = field(root, "dim");
  if (!dim_j.is_number_unsigned() && !(dim_j.is_number_integer() && dim_j.get<long>() > 0)) bad("dim must be positive");
  auto n = dim_j.get<std::size_t>();
  if (n == 0) bad("dim must be positive");
  if (n > options.max_dim)
    throw Error(ErrorCode::DimensionMismatch,
                "dim " + std::to_string(n) + " exceeds the limit " + std::to_string(options.max_dim));
  Algebra a(n);
  const json& sc = field(root, "sc");
  if (!sc.is_array()) bad("sc must be an array of [i, j, k, scalar]");
  for (const auto& t : sc) {
    if (!t.is_array() || t.size() != 4) bad("sc entries must be [i, j, k, scalar]");
    a.add_structure_constant(index_of(t[0], n, "sc"), index_of(t[1], n, "sc"), index_of(t[2], n, "sc"),
                             scalar_of(t[3], "sc"));
  }
  if (root.contains("star") && !root.at("star").is_null()) a.set_star(matrix_of(root.at("star"), n, n, "star"));
  return a;
}

Multiplier multiplier_of(const json& j, const Algebra& x, const std::string& where) {
  const std::size_t n = x.dim();
  if (j.contains("element")) return multiplier_from_element(x, vec_of(j.at("element"), n, where + ".element"));
  return {matrix_of(field(j, "L"), n, n, where + ".L"), matrix_of(field(j, "R"), n, n, where + ".R")};
}

}  // namespace

AlgebraSpec parse_spec_unchecked(const std::string& json_text, const ParseOptions& options) {
  json root = parse_json(json_text);
  if (!root.is_object()) bad("spec must be a JSON object");
  AlgebraSpec spec;
  spec.name = root.contains("name") && root.at("name").is_string() ? root.at("name").get<std::string>() : "";
  spec.algebra = algebra_of(root, options);
  const std::size_t n = spec.algebra.dim();
  Algebra square = tensor(spec.algebra, spec.algebra);
  const json& delta = field(root, "delta");
  spec.delta.assign(n, zero_multiplier(n * n));
  std::vector<bool> seen(n, false);
  if (delta.contains("tensor")) {
    for (const auto& e : delta.at("tensor")) {
      if (!e.is_array() || e.size() != 2) bad("delta.tensor entries must be [i, coefficients]");
      auto i = index_of(e[0], n, "delta.tensor");
      spec.delta[i] = multiplier_from_element(square, vec_of(e[1], n * n, "delta.tensor"));
      seen[i] = true;
    }
  } else if (delta.contains("pair")) {
    for (const auto& e : delta.at("pair")) {
      if (!e.is_array() || e.size() != 3) bad("delta.pair entries must be [i, L, R]");
      auto i = index_of(e[0], n, "delta.pair");
      spec.delta[i] = {matrix_of(e[1], n * n, n * n, "delta.pair.L"), matrix_of(e[2], n * n, n * n, "delta.pair.R")};
      seen[i] = true;
    }
  } else {
    bad("delta must contain 'tensor' or 'pair'");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) bad("delta missing basis element " + std::to_string(i));
  if (root.contains("counit") && !root.at("counit").is_null()) spec.counit = vec_of(root.at("counit"), n, "counit");
  if (root.contains("antipode") && !root.at("antipode").is_null())
    spec.antipode = matrix_of(root.at("antipode"), n, n, "antipode");
  return spec;
}

Report validate_spec(const AlgebraSpec& spec) {
  Report r;
  r.run("algebra.associative", "(e_i e_j) e_k = e_i (e_j e_k)", [&] { return check_associative(spec.algebra); });
  r.run("algebra.nondegenerate", "xA = 0 or Ax = 0 implies x = 0", [&] { return check_nondegenerate(spec.algebra); });
  if (spec.algebra.has_star())
    r.run("algebra.star", "x^** = x and (xy)^* = y^* x^*", [&] { return check_star(spec.algebra); });
  Algebra square = tensor(spec.algebra, spec.algebra);
  r.run("delta.multiplier", "Delta(e_i) acts compatibly on both sides of A (x) A", [&] {
    for (std::size_t i = 0; i < spec.delta.size(); ++i)
      if (auto v = check_multiplier(square, spec.delta[i]); !v)
        return Verdict::fail("Delta(e" + std::to_string(i) + "): " + v.witness);
    return Verdict::pass();
  });
  return r;
}

AlgebraSpec parse_spec(const std::string& json_text, const ParseOptions& options) {
  AlgebraSpec spec = parse_spec_unchecked(json_text, options);
  Report r = validate_spec(spec);
  for (const auto& e : r.entries())
    if (e.status == Status::Fail) throw Error(ErrorCode::AxiomViolation, e.id + ": " + e.witness);
  return spec;
}

std::string emit_spec(const AlgebraSpec& spec) {
  const std::size_t n = spec.algebra.dim();
  json root;
  root["name"] = spec.name;
  root["dim"] = n;
  json sc = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : spec.algebra.product(i, j)) sc.push_back(json::array({i, j, t.index, t.coeff.str()}));
  root["sc"] = std::move(sc);
  Algebra square = tensor(spec.algebra, spec.algebra);
  bool elementwise = true;
  std::vector<Vec> elements;
  try {
    ElementRecovery rec(square);
    for (const auto& d : spec.delta) {
      auto x = rec.from_multiplier(d);
      if (!x) {
        elementwise = false;
        break;
      }
      elements.push_back(*x);
    }
  } catch (const Error&) {
    elementwise = false;
  }
  json delta;
  if (elementwise) {
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i) entries.push_back(json::array({i, json_of(elements[i])}));
    delta["tensor"] = std::move(entries);
  } else {
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i)
      entries.push_back(json::array({i, json_of(spec.delta[i].left), json_of(spec.delta[i].right)}));
    delta["pair"] = std::move(entries);
  }
  root["delta"] = std::move(delta);
  if (spec.algebra.has_star()) root["star"] = json_of(spec.algebra.star_matrix());
  if (spec.counit) root["counit"] = json_of(*spec.counit);
  if (spec.antipode) root["antipode"] = json_of(*spec.antipode);
  return root.dump(1) + "\n";
}

CorepInput parse_corep_input(const std::string& json_text, const Algebra& a, const ParseOptions& options) {
  json root = parse_json(json_text);
  CorepInput in;
  in.target = algebra_of(field(root, "target"), options);
  Algebra ab = tensor(a, in.target);
  in.v = multiplier_of(field(root, "V"), ab, "V");
  return in;
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace aqg
