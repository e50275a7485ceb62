#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aqg/algebra.hpp"

namespace aqg {

enum class Status { Pass, Fail, Skip };

struct CheckEntry {
  std::string id;        // stable dotted identifier, e.g. "haar.left.invariant"
  std::string relation;  // the identity being checked, in plain notation
  Status status = Status::Pass;
  std::string witness;   // basis indices and unequal values, or the skip reason
};

class Report {
 public:
  void add(std::string id, std::string relation, const Verdict& v);
  void skip(std::string id, std::string relation, std::string reason);
  // Runs `body`; thrown aqg::Error turns into a failing entry carrying the message.
  void run(std::string id, std::string relation, const std::function<Verdict()>& body);
  void append(const Report& other, const std::string& prefix);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(const std::string& id) const;
  bool passed() const;  // no failing entries
  std::size_t failures() const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace aqg
