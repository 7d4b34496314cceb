#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidyn/error.hpp"
#include "semidyn/util.hpp"

namespace semidyn {

inline constexpr int kDefaultSemigroupCap = 64;

/// Finite inverse semigroup on elements 0..n-1, given by a full
/// multiplication table. Inverses, idempotents and the natural partial order
/// (s <= t iff s = t s#s) are derived at validation time and cached; the
/// structure is immutable afterwards.
class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup() = default;

  int size() const { return n_; }

  int mul(int s, int t) const { return mul_[static_cast<size_t>(s) * n_ + t]; }

  int inv(int s) const { return inv_[s]; }

  bool is_idempotent(int s) const { return idem_[s] != 0; }

  const IndexSet& idempotents() const { return idems_; }

  /// natural partial order
  bool leq(int s, int t) const { return leq_[static_cast<size_t>(s) * n_ + t] != 0; }

  const std::string& label(int s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& l) const;

  std::string format_subset(const IndexSet& s) const;

  bool operator==(const FiniteInverseSemigroup& o) const {
    return n_ == o.n_ && mul_ == o.mul_ && labels_ == o.labels_;
  }

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<char> idem_;
  IndexSet idems_;
  std::vector<char> leq_;
  std::vector<std::string> labels_;

  friend FiniteInverseSemigroup validate_inverse_semigroup(
      const std::vector<std::vector<int>>& table,
      std::vector<std::string> labels, int cap);
};

/// Checks associativity over all triples and existence of a unique
/// generalized inverse for every element, then derives the cached data.
/// Errors: CapExceeded, BadTable, NotAssociative, NoInverse,
/// NonUniqueInverse.
FiniteInverseSemigroup validate_inverse_semigroup(
    const std::vector<std::vector<int>>& table,
    std::vector<std::string> labels = {}, int cap = kDefaultSemigroupCap);

IndexSet idempotents(const FiniteInverseSemigroup& s);

/// Natural partial order; agreement with both idempotent-factor
/// reformulations is enforced once during validation.
bool natural_leq(const FiniteInverseSemigroup& s, int a, int b);

/// Meet of two compatible elements (s#t and st# both idempotent), none
/// otherwise. When defined, equality of the two product formulas and
/// lower-bound property are asserted.
std::optional<int> compatible_meet(const FiniteInverseSemigroup& s, int a,
                                   int b);

/// Partition of the element set into congruence classes. Class ids are dense
/// and ordered by minimal member.
struct Congruence {
  std::vector<int> class_of;
  std::vector<IndexSet> classes;

  int size() const { return static_cast<int>(classes.size()); }
  bool operator==(const Congruence& o) const = default;
};

/// Checks that the classes partition the element set and that the relation is
/// compatible with multiplication (via one-sided products against every
/// element, which is equivalent to the all-quadruples condition).
Congruence validate_congruence(const FiniteInverseSemigroup& s,
                               const std::vector<IndexSet>& classes);

Congruence equality_congruence(const FiniteInverseSemigroup& s);

/// s ~ t iff they admit a common lower bound. The computed relation is
/// transitively closed and the closure is asserted to add nothing
/// (NotTransitiveBug otherwise); the result is asserted to be a congruence,
/// and its quotient is asserted to be a group whenever s is E-unitary.
Congruence min_group_congruence(const FiniteInverseSemigroup& s);

/// Every element above an idempotent is an idempotent.
bool is_e_unitary(const FiniteInverseSemigroup& s);

bool is_idempotent_pure(const FiniteInverseSemigroup& s, const Congruence& c);

struct QuotientResult {
  FiniteInverseSemigroup quotient;
  std::vector<int> projection;  // element -> quotient element (= class id)
};

/// Quotient table on congruence classes; must itself validate as an inverse
/// semigroup (QuotientNotInverse otherwise). The projection is checked to
/// intertwine inversion.
QuotientResult quotient(const FiniteInverseSemigroup& s, const Congruence& c);

/// True iff the (validated) semigroup has a single idempotent.
bool is_group(const FiniteInverseSemigroup& s);

}  // namespace semidyn
