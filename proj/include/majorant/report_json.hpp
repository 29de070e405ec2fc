#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "majorant/certify.hpp"

namespace majorant {

nlohmann::json report_to_json(const ProofReport& report);
void write_report(const ProofReport& report, const std::string& path);

// Re-checks a serialized report purely from its embedded numbers: budget
// identities, plan consistency, endpoint margins, sign-certificate
// arithmetic, ledger formulas, and the verdict. No quadrature is re-run.
struct RevalidationResult {
  bool ok = false;
  std::vector<std::string> problems;
};
RevalidationResult revalidate_report(const nlohmann::json& report);

}  // namespace majorant
