#pragma once

#include <string>
#include <vector>

#include "aqg/linalg.hpp"

namespace aqg {

// Finite group by multiplication table; element 0 is not assumed to be the identity.
class GroupTable {
 public:
  GroupTable(std::string name, std::vector<std::vector<std::size_t>> table);  // throws InvalidGroup
  static GroupTable cyclic(std::size_t order);
  static GroupTable symmetric3();
  static GroupTable trivial();

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t s, std::size_t t) const { return table_[s][t]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t s) const { return inverse_[s]; }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

// JSON specs ready for parse_spec.
// Functions on G: delta_s delta_t = [s = t] delta_s, Delta(delta_s) = sum_{uv = s} delta_u (x) delta_v.
std::string function_algebra(const GroupTable& g);
// Group algebra: lambda_s lambda_t = lambda_st, Delta(lambda_s) = lambda_s (x) lambda_s, lambda_s^* = lambda_{s^-1}.
std::string group_algebra(const GroupTable& g);
// Sweedler's four-dimensional algebra on the basis {1, g, x, gx}.
std::string sweedler();

// Names accepted by model_spec: fun_c2, fun_c4, fun_s3, fun_trivial, grp_c2, grp_c4,
// grp_s3, grp_trivial, sweedler.
std::vector<std::string> model_names();
std::string model_spec(const std::string& name);  // throws InvalidGroup for unknown names

}  // namespace aqg
