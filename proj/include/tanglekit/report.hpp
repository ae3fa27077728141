#ifndef TANGLEKIT_REPORT_HPP
#define TANGLEKIT_REPORT_HPP

#include <string>
#include <vector>

namespace tanglekit {

/// Outcome of one verification suite: a flat list of named checks with
/// expected/observed descriptions. Deterministic for a fixed (suite, rank).
struct Report {
  struct Check {
    std::string id;
    std::string expected;
    std::string observed;
    bool pass;
  };

  std::string suite;
  int rank = 0;
  std::vector<Check> checks;

  void add(const std::string& id, const std::string& expected, const std::string& observed) {
    checks.push_back({id, expected, observed, expected == observed});
  }
  void add_check(const std::string& id, const std::string& expected, const std::string& observed,
                 bool pass) {
    checks.push_back({id, expected, observed, pass});
  }

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  /// Plain-text pass/fail table, one line per check.
  std::string text() const;
};

}  // namespace tanglekit

#endif
