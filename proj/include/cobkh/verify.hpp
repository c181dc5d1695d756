#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cobkh/catalog.hpp"
#include "cobkh/complex.hpp"

namespace cobkh {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  double millis = 0;
  Witness witness;  // non-empty iff failed
  std::string note;
};

/// Check names in run order.
const std::vector<std::string>& check_names();

/// Shell-style glob (*, ?, [..]).
bool glob_match(const std::string& pattern, const std::string& name);

/// Runs one named check against a transcription catalog. Throws
/// InputError for unknown names.
CheckResult run_check(const std::string& name, const Catalog& catalog = default_catalog());

/// Runs every check whose name matches `filter`, in check_names() order.
std::vector<CheckResult> run_all(const std::string& filter = "*", const Catalog& catalog = default_catalog());

bool all_passed(const std::vector<CheckResult>& results);

/// [{name, status, millis, witness?}]
nlohmann::json report_json(const std::vector<CheckResult>& results);
std::string report_text(const std::vector<CheckResult>& results);

}  // namespace cobkh
