#pragma once

#include <string>
#include <vector>

#include "semidyn/error.hpp"
#include "semidyn/util.hpp"

namespace semidyn {

/// Finite discrete space: a nonempty list of uniquely labeled points. Every
/// subset is open, so "homeomorphism between open subsets" is just "partial
/// bijection" and closures are identities throughout the library.
struct FiniteSpace {
  std::vector<std::string> points;

  int size() const { return static_cast<int>(points.size()); }

  int index_of(const std::string& l) const {
    for (int i = 0; i < size(); ++i)
      if (points[i] == l) return i;
    return -1;
  }

  std::string format_subset(const IndexSet& s) const {
    return "{" + join(s, ",", [&](int i) { return points[i]; }) + "}";
  }

  bool operator==(const FiniteSpace&) const = default;
};

inline FiniteSpace make_space(std::vector<std::string> labels) {
  if (labels.empty()) fail("BadSpace", "space must be nonempty");
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        fail("BadSpace", "duplicate point label '" + labels[i] + "'");
  return FiniteSpace{std::move(labels)};
}

}  // namespace semidyn
