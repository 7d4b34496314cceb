#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidyn/util.hpp"

namespace semidyn {

/// Pass/fail evidence for one checked statement on one instance. A failing
/// report always carries at least one witness; set equalities record the
/// cardinality of both sides so reports double as a numeric summary.
struct CheckReport {
  std::string check;
  std::string instance;
  std::string params;
  bool pass = true;
  std::vector<std::string> witnesses;
  struct SizeEntry {
    std::string what;
    long long lhs = 0;
    long long rhs = 0;
  };
  std::vector<SizeEntry> sizes;
  std::optional<uint64_t> seed;
  std::vector<std::string> notes;  // informational, e.g. strictness witnesses

  CheckReport(std::string check_id, std::string instance_id,
              std::string params_ = "")
      : check(std::move(check_id)),
        instance(std::move(instance_id)),
        params(std::move(params_)) {}

  void require(bool cond, const std::string& witness) {
    if (!cond) {
      pass = false;
      witnesses.push_back(witness);
    }
  }

  /// Record both cardinalities and require the sets themselves to be equal.
  void require_set_equal(const std::string& what, const IndexSet& lhs,
                         const IndexSet& rhs);

  void record_sizes(const std::string& what, long long lhs, long long rhs) {
    sizes.push_back({what, lhs, rhs});
  }

  void note(const std::string& text) { notes.push_back(text); }

  /// One-line machine-parseable rendering, stable across runs.
  std::string to_line() const;
};

std::string render_reports(const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace semidyn
