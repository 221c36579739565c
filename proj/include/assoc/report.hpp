#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace assoc {

struct Config {
  unsigned q_order = 64;
  unsigned series_order = 8;
  double tol = 1e-9;
  unsigned trials = 100;
  std::uint64_t seed = 0;
};

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::optional<std::string> residual;
  std::int64_t millis = 0;
};

struct CheckOutcome {
  bool ok = false;
  std::string detail;
  std::optional<std::string> residual;
};

/// Ordered list of checks belonging to one suite. Fails iff any check fails.
class SuiteReport {
 public:
  explicit SuiteReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(const std::string& name, bool ok, std::string detail = {},
           std::optional<std::string> residual = std::nullopt);
  void skip(const std::string& name, std::string detail);
  /// Runs fn, timing it. Exceptions become failing checks carrying the message.
  void run(const std::string& name, const std::function<CheckOutcome()>& fn);
  /// Appends other's checks with names prefixed by `prefix.`
  void merge(const SuiteReport& other, const std::string& prefix);

  bool passed() const;
  int count(Status s) const;
  const Check* find(const std::string& name) const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

/// Formats a residual as a decimal string with 3 significant digits.
std::string format_residual(double r);

}  // namespace assoc
