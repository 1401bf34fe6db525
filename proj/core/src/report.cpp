#include "dsgeo/report.hpp"

#include <json.hpp>

#include "dsgeo/errors.hpp"

namespace dsgeo {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Reported: return "reported";
  }
  return "unknown";
}

}  // namespace

CheckRecord checked(std::string id, std::string anchor, double deviation,
                    double tolerance, std::string note) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.deviation = deviation;
  r.tolerance = tolerance;
  r.status = deviation <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = std::move(note);
  return r;
}

CheckRecord reported(std::string id, std::string anchor, double deviation,
                     std::string note) {
  CheckRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.deviation = deviation;
  r.tolerance = -1.0;
  r.status = CheckStatus::Reported;
  r.note = std::move(note);
  return r;
}

void Report::add(CheckRecord r) {
  for (const auto& existing : checks) {
    if (existing.id == r.id) {
      throw ConfigInvalid("report: duplicate check id '" + r.id + "'");
    }
  }
  checks.push_back(std::move(r));
}

int Report::count(CheckStatus s) const {
  int n = 0;
  for (const auto& c : checks) {
    if (c.status == s) ++n;
  }
  return n;
}

bool Report::all_pass() const { return count(CheckStatus::Fail) == 0; }

int Report::exit_code() const { return all_pass() ? 0 : 1; }

std::string Report::serialize() const {
  nlohmann::ordered_json j;
  j["tool"] = tool;
  j["version"] = version;
  j["command"] = command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config_echo) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    e["deviation"] = c.deviation;
    if (c.tolerance >= 0.0) e["tolerance"] = c.tolerance;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"reported", count(CheckStatus::Reported)}};
  return j.dump(2) + "\n";
}

}  // namespace dsgeo
