#include "aqg/models.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>

#include "aqg/error.hpp"

namespace aqg {

using json = nlohmann::ordered_json;

GroupTable::GroupTable(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty group");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "table is not square");
    for (auto v : row)
      if (v >= n) throw Error(ErrorCode::InvalidGroup, "table entry out of range");
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (table_[table_[s][t]][u] != table_[s][table_[t][u]])
          throw Error(ErrorCode::InvalidGroup, "not associative at (" + std::to_string(s) + ", " + std::to_string(t) +
                                                   ", " + std::to_string(u) + ")");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_id = true;
    for (std::size_t s = 0; s < n && is_id; ++s) is_id = table_[e][s] == s && table_[s][e] == s;
    if (is_id) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidGroup, "no identity element");
  inverse_.assign(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (table_[s][t] == identity_ && table_[t][s] == identity_) inverse_[s] = t;
  for (auto v : inverse_)
    if (v == n) throw Error(ErrorCode::InvalidGroup, "element without inverse");
}

GroupTable GroupTable::cyclic(std::size_t order) {
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t s = 0; s < order; ++s)
    for (std::size_t u = 0; u < order; ++u) t[s][u] = (s + u) % order;
  return GroupTable("C" + std::to_string(order), std::move(t));
}

GroupTable GroupTable::symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; composition (st)(x) = s(t(x)).
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[s][perms[u][x]];
      t[s][u] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return GroupTable("S3", std::move(t));
}

GroupTable GroupTable::trivial() { return GroupTable("trivial", {{0}}); }

namespace {

json dense_identity(std::size_t n) {
  json m = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(r == c ? "1" : "0");
    m.push_back(std::move(row));
  }
  return m;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::string function_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  json root;
  root["name"] = "fun_" + lower(g.name());
  root["dim"] = n;
  json sc = json::array();
  for (std::size_t s = 0; s < n; ++s) sc.push_back(json::array({s, s, s, "1"}));
  root["sc"] = std::move(sc);
  json entries = json::array();
  for (std::size_t s = 0; s < n; ++s) {
    json coeffs = json::array();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) coeffs.push_back(g.mul(u, v) == s ? "1" : "0");
    entries.push_back(json::array({s, std::move(coeffs)}));
  }
  root["delta"]["tensor"] = std::move(entries);
  root["star"] = dense_identity(n);
  return root.dump(1) + "\n";
}

std::string group_algebra(const GroupTable& g) {
  const std::size_t n = g.order();
  json root;
  root["name"] = "grp_" + lower(g.name());
  root["dim"] = n;
  json sc = json::array();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) sc.push_back(json::array({s, t, g.mul(s, t), "1"}));
  root["sc"] = std::move(sc);
  json entries = json::array();
  for (std::size_t s = 0; s < n; ++s) {
    json coeffs = json::array();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) coeffs.push_back(u == s && v == s ? "1" : "0");
    entries.push_back(json::array({s, std::move(coeffs)}));
  }
  root["delta"]["tensor"] = std::move(entries);
  json star = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(g.inverse(c) == r ? "1" : "0");
    star.push_back(std::move(row));
  }
  root["star"] = std::move(star);
  return root.dump(1) + "\n";
}

std::string sweedler() {
  // Basis 0 = 1, 1 = g, 2 = x, 3 = gx with g^2 = 1, x^2 = 0, xg = -gx.
  json root;
  root["name"] = "sweedler";
  root["dim"] = 4;
  const char* table[4][4] = {
      {"+0", "+1", "+2", "+3"},
      {"+1", "+0", "+3", "+2"},
      {"+2", "-3", "", ""},
      {"+3", "-2", "", ""},
  };
  json sc = json::array();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::string e = table[i][j];
      if (e.empty()) continue;
      sc.push_back(json::array({i, j, static_cast<std::size_t>(e[1] - '0'), e[0] == '-' ? "-1" : "1"}));
    }
  root["sc"] = std::move(sc);
  auto tensor_of = [](std::initializer_list<std::pair<std::size_t, std::size_t>> terms) {
    json coeffs = json::array();
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v) {
        bool hit = std::any_of(terms.begin(), terms.end(), [&](const auto& p) { return p.first == u && p.second == v; });
        coeffs.push_back(hit ? "1" : "0");
      }
    return coeffs;
  };
  json entries = json::array();
  entries.push_back(json::array({0, tensor_of({{0, 0}})}));
  entries.push_back(json::array({1, tensor_of({{1, 1}})}));
  entries.push_back(json::array({2, tensor_of({{2, 0}, {1, 2}})}));  // x (x) 1 + g (x) x
  entries.push_back(json::array({3, tensor_of({{3, 1}, {0, 3}})}));  // gx (x) g + 1 (x) gx
  root["delta"]["tensor"] = std::move(entries);
  return root.dump(1) + "\n";
}

std::vector<std::string> model_names() {
  return {"fun_c2", "fun_c4", "fun_s3", "fun_trivial", "grp_c2", "grp_c4", "grp_s3", "grp_trivial", "sweedler"};
}

std::string model_spec(const std::string& name) {
  auto group = [&](const std::string& tag) {
    if (tag == "c2") return GroupTable::cyclic(2);
    if (tag == "c4") return GroupTable::cyclic(4);
    if (tag == "s3") return GroupTable::symmetric3();
    if (tag == "trivial") return GroupTable::trivial();
    throw Error(ErrorCode::InvalidGroup, "unknown model '" + name + "'");
  };
  if (name == "sweedler") return sweedler();
  if (name.rfind("fun_", 0) == 0) return function_algebra(group(name.substr(4)));
  if (name.rfind("grp_", 0) == 0) return group_algebra(group(name.substr(4)));
  throw Error(ErrorCode::InvalidGroup, "unknown model '" + name + "'");
}

}  // namespace aqg
