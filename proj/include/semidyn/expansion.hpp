#pragma once

#include <vector>

#include "semidyn/inverse_semigroup.hpp"
#include "semidyn/partial_action.hpp"
#include "semidyn/report.hpp"

namespace semidyn {

inline constexpr int kDefaultExpansionCap = 6;

/// Element of the expansion semigroup of a base inverse semigroup A, written
/// as an idempotent prefix over a set C of base elements followed by a single
/// anchor a, where every c in C satisfies c c# = a a# and both a and a a#
/// belong to C.
struct NormalForm {
  IndexSet prefix;  // the set C, sorted
  int anchor = -1;  // the element a

  bool operator==(const NormalForm&) const = default;
  bool operator<(const NormalForm& o) const {
    if (anchor != o.anchor) return anchor < o.anchor;
    return prefix < o.prefix;
  }
};

/// Rewrites a word over generators of the expansion (one symbol per base
/// element) to its normal form, by repeatedly fusing the last letter into an
/// idempotent-prefixed product and then re-anchoring prefix entries whose
/// support disagrees with the anchor's. Every step is a consequence of the
/// three defining relations; the step budget 10*len*|A|^2 turns
/// non-termination into NormalizationDiverged instead of a hang.
NormalForm normalize(const FiniteInverseSemigroup& a,
                     const std::vector<int>& word);

/// The expansion semigroup: all normal forms with multiplication computed by
/// normalize on concatenated generator words. Construction re-derives and
/// asserts: the table is a valid inverse semigroup, the generator embedding
/// intertwines inversion and satisfies the three defining relations, the
/// anchor projection is a left inverse of the embedding, E-unitarity is
/// equivalent to E-unitarity of the base, and (for |A| <= 4) the whole table
/// is identical to the one induced by the independent word-congruence oracle.
struct ExpansionSemigroup {
  FiniteInverseSemigroup base;
  std::vector<NormalForm> elements;  // sorted by (anchor, prefix)
  FiniteInverseSemigroup sg;
  std::vector<int> iota_of;  // base element -> expansion element index

  int index_of(const NormalForm& nf) const;
  const NormalForm& iota(int a) const { return elements[iota_of[a]]; }
  int q(int element) const { return elements[element].anchor; }
};

ExpansionSemigroup expansion(const FiniteInverseSemigroup& a,
                             int cap = kDefaultExpansionCap);

/// Independent oracle: classes of all nonempty generator words of length at
/// most max_len under the congruence generated by the three defining
/// relations, computed by seeding every in-context rule instance and closing
/// under one-letter extensions to a fixed point.
class OracleCongruence {
 public:
  OracleCongruence(const FiniteInverseSemigroup& a, int max_len);

  int alphabet() const { return n_; }
  int max_len() const { return max_len_; }
  int class_count() const { return class_count_; }

  /// canonical class id (smallest code in the class)
  long long class_of(const std::vector<int>& word) const;

 private:
  long long code_of(const std::vector<int>& word) const;

  int n_;
  int max_len_;
  int class_count_;
  std::vector<long long> offset_;  // offset_[len] = first code of that length
  mutable UnionFind uf_{0};
};

inline OracleCongruence oracle_congruence(const FiniteInverseSemigroup& a,
                                          int max_len) {
  return OracleCongruence(a, max_len);
}

/// Smallest length at which two consecutive oracle class counts agree;
/// returns that stable count.
int oracle_stable_count(const FiniteInverseSemigroup& a, int start_len,
                        int max_len_cap = 12);

/// Product table computed inside the word oracle alone: elements are matched
/// to classes by their canonical spellings (exactly one normal form per
/// class), shortest representatives are certified against the canonical
/// spellings, and each product entry is the element whose class contains the
/// concatenated representatives. expansion() fails construction for bases of
/// size at most 4 unless this table equals its own.
std::vector<std::vector<int>> oracle_induced_table(const ExpansionSemigroup& ex);

/// Genuine action of the expansion attached to a partial action of the base:
/// a normal form acts like its anchor, on the part of the anchor's domain
/// pulled back from the images of all prefix entries. Construction asserts
/// genuineness, the factorization through partial identities, and that
/// composing with the embedding recovers the base action exactly.
PartialAction expansion_action(const ExpansionSemigroup& sa,
                               const PartialAction& base_action);

/// Recurrence sets of base and expansion action match along the embedding
/// and the anchor projection.
CheckReport check_fusirat(const ExpansionSemigroup& sa,
                          const PartialAction& base,
                          const PartialAction& expanded, const IndexSet& m,
                          const IndexSet& n, const std::string& instance_id);

/// At a fixed point: the anchor projection maps applicable elements onto the
/// base applicable set; elements with equal anchors are pointwise
/// equivalent, and pointwise equivalence corresponds exactly to pointwise
/// equivalence of the anchors (for a group base: anchor equality); the
/// induced class map bijects the pointwise recurrence classes of the
/// expansion onto those of the base, with equal cardinalities.
CheckReport check_potrivire(const ExpansionSemigroup& sa,
                            const PartialAction& base,
                            const PartialAction& expanded, int sigma,
                            const IndexSet& n, const std::string& instance_id);

}  // namespace semidyn
