#include "semidyn/report.hpp"

#include <algorithm>

namespace semidyn {

void CheckReport::require_set_equal(const std::string& what, const IndexSet& lhs,
                                    const IndexSet& rhs) {
  record_sizes(what, static_cast<long long>(lhs.size()),
               static_cast<long long>(rhs.size()));
  if (lhs != rhs) {
    pass = false;
    IndexSet only_l = set_difference(lhs, rhs);
    IndexSet only_r = set_difference(rhs, lhs);
    witnesses.push_back(
        what + ": lhs{" + join(only_l, ",", [](int x) { return std::to_string(x); }) +
        "} rhs{" + join(only_r, ",", [](int x) { return std::to_string(x); }) + "}");
  }
}

std::string CheckReport::to_line() const {
  std::string line = "check=" + check + " instance=" + instance;
  if (!params.empty()) line += " " + params;
  line += std::string(" verdict=") + (pass ? "pass" : "fail");
  if (!sizes.empty()) {
    line += " sizes[";
    line += join(sizes, ";", [](const SizeEntry& e) {
      return e.what + "=" + std::to_string(e.lhs) + "|" + std::to_string(e.rhs);
    });
    line += "]";
  }
  if (seed) line += " seed=" + std::to_string(*seed);
  if (!witnesses.empty()) {
    line += " witnesses[";
    line += join(witnesses, ";", [](const std::string& w) { return w; });
    line += "]";
  }
  if (!notes.empty()) {
    line += " notes[";
    line += join(notes, ";", [](const std::string& w) { return w; });
    line += "]";
  }
  return line;
}

std::string render_reports(const std::vector<CheckReport>& reports) {
  std::vector<std::string> lines;
  lines.reserve(reports.size());
  for (const auto& r : reports) lines.push_back(r.to_line());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.pass; });
}

}  // namespace semidyn
