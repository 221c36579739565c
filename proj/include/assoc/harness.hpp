#pragma once

// Suite registry and report formatting shared by the CLI, the acceptance
// runner and the Python bindings.

#include <string>
#include <vector>

#include "assoc/report.hpp"

namespace assoc {

/// Module suites in run order. "all" is accepted by run_suite but not listed.
const std::vector<std::string>& suite_names();
bool is_selector(const std::string& name);

/// Runs one suite, or every suite for "all" (concurrently, assembled in order
/// with names prefixed by the suite). Throws std::invalid_argument on an
/// unknown selector.
SuiteReport run_suite(const std::string& selector, const Config& cfg);

struct FormatOptions {
  bool timings = true;  // false writes millis as 0 so reports are byte-identical
};

std::string to_json(const SuiteReport& r, const Config& cfg, FormatOptions opt = {});
std::string to_text(const SuiteReport& r, const Config& cfg, FormatOptions opt = {});

}  // namespace assoc
