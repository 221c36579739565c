#include "assoc/harness.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "assoc/chazy.hpp"
#include "assoc/elliptic.hpp"
#include "assoc/formalgroup.hpp"
#include "assoc/frobenius.hpp"
#include "assoc/gaussmanin.hpp"
#include "assoc/quasimodular.hpp"
#include "assoc/twovalued.hpp"
#include "assoc/yangbaxter.hpp"

namespace assoc {

namespace {

using Runner = std::function<SuiteReport(const Config&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> r = {
      {"twovalued", twovalued_suite},       {"elliptic", elliptic_suite},     {"formalgroup", formalgroup_suite},
      {"quasimodular", quasimodular_suite}, {"chazy", chazy_suite},           {"gaussmanin", gaussmanin_suite},
      {"frobenius", frobenius_suite},       {"yangbaxter", yangbaxter_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"twovalued", "elliptic",   "formalgroup", "quasimodular",
                                                 "chazy",     "gaussmanin", "frobenius",   "yangbaxter"};
  return names;
}

bool is_selector(const std::string& name) { return name == "all" || runners().count(name) > 0; }

SuiteReport run_suite(const std::string& selector, const Config& cfg) {
  if (selector != "all") {
    auto it = runners().find(selector);
    if (it == runners().end()) throw std::invalid_argument("unknown suite: " + selector);
    return it->second(cfg);
  }
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& name : suite_names())
    jobs.push_back(std::async(std::launch::async, [&cfg, fn = runners().at(name)] { return fn(cfg); }));
  SuiteReport all("all");
  for (std::size_t i = 0; i < jobs.size(); ++i) all.merge(jobs[i].get(), suite_names()[i]);
  return all;
}

std::string to_json(const SuiteReport& r, const Config& cfg, FormatOptions opt) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite();
  j["config"] = {{"q_order", cfg.q_order},
                 {"series_order", cfg.series_order},
                 {"tol", cfg.tol},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks()) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    e["residual"] = c.residual ? nlohmann::ordered_json(*c.residual) : nlohmann::ordered_json(nullptr);
    e["millis"] = opt.timings ? c.millis : 0;
    j["checks"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skipped", r.count(Status::Skipped)}};
  return j.dump(2) + "\n";
}

std::string to_text(const SuiteReport& r, const Config& cfg, FormatOptions opt) {
  std::size_t wname = 4, wres = 8;
  for (const auto& c : r.checks()) {
    wname = std::max(wname, c.name.size());
    if (c.residual) wres = std::max(wres, c.residual->size());
  }
  std::ostringstream os;
  os << "suite " << r.suite() << "  q_order=" << cfg.q_order << " series_order=" << cfg.series_order
     << " tol=" << cfg.tol << " trials=" << cfg.trials << " seed=" << cfg.seed << "\n";
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  for (const auto& c : r.checks()) {
    std::string ms = std::to_string(opt.timings ? c.millis : 0) + "ms";
    os << pad(c.name, wname) << "  " << pad(status_name(c.status), 7) << "  " << pad(c.residual.value_or("-"), wres)
       << "  " << pad(ms, 8) << "  " << c.detail << "\n";
  }
  os << "summary: " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::Skipped) << " skipped\n";
  return os.str();
}

}  // namespace assoc
