#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace unitail {

enum class CheckStatus { pass, fail, warn };

const char* to_string(CheckStatus s);

/// One named verification check: signed margin (>= 0 means the inequality
/// held with room to spare), the tolerance it was judged against, and a
/// human-readable detail line.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  double margin = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Ordered list of checks. Aggregate status is fail iff any check failed.
class CertReport {
 public:
  void add(std::string id, CheckStatus status, double margin, double tolerance,
           std::string detail = {}) {
    checks_.push_back({std::move(id), status, margin, tolerance, std::move(detail)});
  }

  /// Convenience: pass iff margin >= tolerance.
  void add_margin_check(std::string id, double margin, double tolerance,
                        std::string detail = {}) {
    add(std::move(id), margin >= tolerance ? CheckStatus::pass : CheckStatus::fail,
        margin, tolerance, std::move(detail));
  }

  /// Append another report's checks, prefixing their ids.
  void merge(const std::string& prefix, const CertReport& other) {
    for (const auto& c : other.checks_) {
      checks_.push_back({prefix + c.id, c.status, c.margin, c.tolerance, c.detail});
    }
  }

  const std::vector<CheckResult>& checks() const { return checks_; }

  bool passed() const {
    for (const auto& c : checks_)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks_)
      if (c.status == s) ++n;
    return n;
  }

  /// Smallest margin among all checks (0 if empty).
  double min_margin() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace unitail
