#include "assoc/report.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

namespace assoc {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

void SuiteReport::add(const std::string& name, bool ok, std::string detail,
                      std::optional<std::string> residual) {
  checks_.push_back({name, ok ? Status::Pass : Status::Fail, std::move(detail), std::move(residual), 0});
}

void SuiteReport::skip(const std::string& name, std::string detail) {
  checks_.push_back({name, Status::Skipped, std::move(detail), std::nullopt, 0});
}

void SuiteReport::run(const std::string& name, const std::function<CheckOutcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  c.name = name;
  try {
    CheckOutcome o = fn();
    c.status = o.ok ? Status::Pass : Status::Fail;
    c.detail = std::move(o.detail);
    c.residual = std::move(o.residual);
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  checks_.push_back(std::move(c));
}

void SuiteReport::merge(const SuiteReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
}

bool SuiteReport::passed() const { return count(Status::Fail) == 0; }

int SuiteReport::count(Status s) const {
  int n = 0;
  for (const auto& c : checks_)
    if (c.status == s) ++n;
  return n;
}

const Check* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

}  // namespace assoc
