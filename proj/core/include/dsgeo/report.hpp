#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dsgeo {

// "reported" is reserved for printed-formula-vs-oracle comparisons that are
// informational: they never affect the exit code.
enum class CheckStatus { Pass, Fail, Reported };

struct CheckRecord {
  std::string id;       // unique within a report
  std::string anchor;   // external reference the check audits, e.g. "Eq(48)"
  CheckStatus status = CheckStatus::Pass;
  double deviation = 0.0;
  double tolerance = -1.0;  // negative: informational, serialized without one
  std::string note;
};

// Deviation measured against a tolerance; pass iff deviation <= tolerance.
CheckRecord checked(std::string id, std::string anchor, double deviation,
                    double tolerance, std::string note = "");

// Informational record for audited printed formulas.
CheckRecord reported(std::string id, std::string anchor, double deviation,
                     std::string note = "");

struct Report {
  std::string tool = "dsgeo";
  std::string version;
  std::string command;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<CheckRecord> checks;

  // Appends, enforcing id uniqueness.
  void add(CheckRecord r);

  int count(CheckStatus s) const;
  bool all_pass() const;            // no Fail entries
  int exit_code() const;            // 1 iff any Fail, else 0

  // Canonical serialization: stable key order, shortest round-trip numbers.
  // Identical config and seed produce a byte-identical document.
  std::string serialize() const;
};

}  // namespace dsgeo
