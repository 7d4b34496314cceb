#pragma once

#include <string>
#include <vector>

#include "semidyn/error.hpp"
#include "semidyn/inverse_semigroup.hpp"
#include "semidyn/util.hpp"

namespace semidyn {

/// Finite groupoid: arrows 0..k-1, a distinguished subset of unit arrows,
/// source and range maps into the units, and a partial composition defined
/// exactly on pairs with matching source and range. Inverses are derived
/// during validation.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;

  int size() const { return k_; }
  const IndexSet& units() const { return units_; }
  bool is_unit(int x) const { return unit_flag_[x] != 0; }

  int d(int x) const { return d_[x]; }
  int r(int x) const { return r_[x]; }

  /// xi after eta; -1 when d(xi) != r(eta)
  int compose(int xi, int eta) const {
    return comp_[static_cast<size_t>(xi) * k_ + eta];
  }

  int inverse(int x) const { return inv_[x]; }

  const std::string& label(int x) const { return labels_[x]; }
  int index_of_label(const std::string& l) const;

  std::string format_subset(const IndexSet& s) const {
    return "{" + join(s, ",", [&](int x) { return labels_[x]; }) + "}";
  }

  bool operator==(const FiniteGroupoid& o) const {
    return units_ == o.units_ && d_ == o.d_ && r_ == o.r_ && comp_ == o.comp_ &&
           labels_ == o.labels_;
  }

 private:
  int k_ = 0;
  IndexSet units_;
  std::vector<char> unit_flag_;
  std::vector<int> d_, r_, inv_;
  std::vector<int> comp_;  // k*k, -1 where undefined
  std::vector<std::string> labels_;

  friend FiniteGroupoid validate_groupoid(const IndexSet& units,
                                          const std::vector<int>& d,
                                          const std::vector<int>& r,
                                          const std::vector<std::vector<int>>& comp,
                                          std::vector<std::string> labels);
};

/// comp[xi][eta] must be -1 exactly when d(xi) != r(eta). Checks unit laws,
/// source/range of products, associativity on all composable triples, and
/// existence of a unique two-sided inverse per arrow.
/// Errors: BadTable, BadUnit, NotAssociative, BadInverse.
FiniteGroupoid validate_groupoid(const IndexSet& units,
                                 const std::vector<int>& d,
                                 const std::vector<int>& r,
                                 const std::vector<std::vector<int>>& comp,
                                 std::vector<std::string> labels = {});

/// Arrows with source in M and range in N (M, N sets of unit arrows).
IndexSet restriction(const FiniteGroupoid& g, const IndexSet& m,
                     const IndexSet& n);

/// Pair groupoid on n points: arrows (i,j) = j -> i, (i,j)(j,k) = (i,k).
FiniteGroupoid pair_groupoid(int n);

/// A group seen as a groupoid with one unit.
FiniteGroupoid group_groupoid(const FiniteInverseSemigroup& g);

}  // namespace semidyn
