#include "mimick/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace mimick {

void Report::add_all(const std::vector<ClaimCheck>& checks) {
  checks_.insert(checks_.end(), checks.begin(), checks.end());
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const ClaimCheck& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const ClaimCheck& c) { return !c.pass; }));
}

void Report::write_text(std::ostream& out, bool onlyFailures) const {
  for (const ClaimCheck& c : checks_) {
    if (onlyFailures && c.pass) {
      continue;
    }
    out << (c.pass ? "PASS " : "FAIL ") << c.claim << " [" << c.instance << "] expected=" << c.expected
        << " observed=" << c.observed << '\n';
  }
  out << command_ << ": " << (checks_.size() - failures()) << '/' << checks_.size() << " claims pass"
      << (all_pass() ? "" : " (FAIL)") << '\n';
}

void Report::write_jsonl(std::ostream& out) const {
  for (const ClaimCheck& c : checks_) {
    nlohmann::ordered_json j;
    j["format"] = kReportFormat;
    j["command"] = command_;
    j["params"] = params_;
    j["claim"] = c.claim;
    j["instance"] = c.instance;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["verdict"] = c.pass ? "pass" : "fail";
    out << j.dump() << '\n';
  }
}

}  // namespace mimick
