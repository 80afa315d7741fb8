#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "precubical/fbg.hpp"
#include "precubical/reduce.hpp"

namespace precubical::cli {

/// Exit codes: success, domain failure, usage or input error.
enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string format_certificate(const ReductionCertificate& cert);
nlohmann::json certificate_json(const ReductionCertificate& cert);
std::string format_fbg(const FbgTable& table, bool representatives = false);
nlohmann::json fbg_json(const FbgTable& table);

}  // namespace precubical::cli
