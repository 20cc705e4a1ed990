#ifndef CREMONA_CHECKS_HPP
#define CREMONA_CHECKS_HPP

// The verification registry: every acceptance-level check as a named,
// independently runnable unit.  The CLI's verify-catalog command and the
// acceptance test suite both run through here.

#include <string>
#include <vector>

#include "cremona/ball.hpp"

namespace cremona::checks {

enum class Status { Pass, Fail, RecordedDiscrepancy, Skipped };

struct CheckResult {
  std::string id;
  std::string source_ref;
  Status status = Status::Skipped;
  std::string computed;
  std::string expected;
  std::string tolerance;  // empty for exact checks
};

struct RunOptions {
  std::string filter;  // '*' glob over check ids; empty matches everything
  int precision = kDefaultPrecision;
  unsigned property_instances = 1000;
};

// simple '*' glob
bool glob_match(const std::string& pattern, const std::string& text);

// Runs every check whose id matches the filter; results sorted by id.
std::vector<CheckResult> run_checks(const RunOptions& options = {});

const char* status_name(Status s);

// Ids grouped per acceptance criterion, in criterion order.
const std::vector<std::pair<std::string, std::string>>& acceptance_criteria();

}  // namespace cremona::checks

#endif
