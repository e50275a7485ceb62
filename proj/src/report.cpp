#include "aqg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

namespace {
const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}
}  // namespace

void Report::add(std::string id, std::string relation, const Verdict& v) {
  entries_.push_back({std::move(id), std::move(relation), v.ok ? Status::Pass : Status::Fail, v.witness});
}

void Report::skip(std::string id, std::string relation, std::string reason) {
  entries_.push_back({std::move(id), std::move(relation), Status::Skip, std::move(reason)});
}

void Report::run(std::string id, std::string relation, const std::function<Verdict()>& body) {
  try {
    add(std::move(id), std::move(relation), body());
  } catch (const Error& e) {
    add(std::move(id), std::move(relation), Verdict::fail(e.what()));
  }
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    e.id = prefix + e.id;
    entries_.push_back(std::move(e));
  }
}

const CheckEntry* Report::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.status == Status::Fail) ++n;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << status_name(e.status) << "  " << e.id << "  [" << e.relation << "]";
    if (!e.witness.empty()) os << "\n      " << e.witness;
    os << "\n";
  }
  std::size_t pass = 0, skip = 0;
  for (const auto& e : entries_) {
    if (e.status == Status::Pass) ++pass;
    if (e.status == Status::Skip) ++skip;
  }
  os << pass << " passed, " << failures() << " failed, " << skip << " skipped\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["check_id"] = e.id;
    j["relation"] = e.relation;
    j["verdict"] = status_name(e.status);
    j["witness"] = e.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(e.witness);
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["passed"] = passed();
  root["checks"] = std::move(checks);
  return root.dump(2);
}

}  // namespace aqg
