#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace mimick {

inline constexpr const char* kReportFormat = "mimick-report/1";

/// One checked claim. Rendered as a text line and as a JSON record.
struct ClaimCheck {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Collects claim records for one command run. Parameters (seed, k, ...) are
/// copied into every JSON record.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void param(const std::string& key, const std::string& value) { params_[key] = value; }
  void add(ClaimCheck check) { checks_.push_back(std::move(check)); }
  void add_all(const std::vector<ClaimCheck>& checks);

  const std::vector<ClaimCheck>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t failures() const;

  /// "PASS claim [instance] expected=... observed=..." per record, then a summary line.
  void write_text(std::ostream& out, bool onlyFailures = false) const;
  /// One JSON object per line.
  void write_jsonl(std::ostream& out) const;

 private:
  std::string command_;
  std::map<std::string, std::string> params_;
  std::vector<ClaimCheck> checks_;
};

}  // namespace mimick
