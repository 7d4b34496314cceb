#include "semidyn/inverse_semigroup.hpp"

#include <algorithm>

namespace semidyn {

int FiniteInverseSemigroup::index_of_label(const std::string& l) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == l) return i;
  return -1;
}

std::string FiniteInverseSemigroup::format_subset(const IndexSet& s) const {
  return "{" + join(s, ",", [&](int i) { return labels_[i]; }) + "}";
}

FiniteInverseSemigroup validate_inverse_semigroup(
    const std::vector<std::vector<int>>& table, std::vector<std::string> labels,
    int cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail("BadTable", "empty multiplication table");
  if (n > cap)
    fail("CapExceeded",
         str("semigroup size ", n, " exceeds cap ", cap));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail("BadTable", "multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) fail("BadTable", str("entry ", x, " out of range"));
  }

  FiniteInverseSemigroup s;
  s.n_ = n;
  s.mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.mul_[static_cast<size_t>(a) * n + b] = table[a][b];

  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    fail("BadTable", "label count does not match element count");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        fail("BadTable", "duplicate element label '" + labels[i] + "'");
  s.labels_ = std::move(labels);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          fail("NotAssociative",
               str("(", s.label(a), "*", s.label(b), ")*", s.label(c),
                   " != ", s.label(a), "*(", s.label(b), "*", s.label(c), ")"));

  s.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (s.mul(s.mul(a, x), a) == a && s.mul(s.mul(x, a), x) == x) {
        if (s.inv_[a] >= 0)
          fail("NonUniqueInverse",
               str(s.label(a), " has generalized inverses ",
                   s.label(s.inv_[a]), " and ", s.label(x)));
        s.inv_[a] = x;
      }
    }
    if (s.inv_[a] < 0) fail("NoInverse", s.label(a) + " has no generalized inverse");
  }

  s.idem_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    if (s.mul(a, a) == a) {
      s.idem_[a] = 1;
      s.idems_.push_back(a);
    }
  }
  // consequence of unique inverses; a failure here is a logic bug
  for (int e : s.idems_)
    for (int f : s.idems_)
      internal_check(s.mul(e, f) == s.mul(f, e),
                     "idempotents " + s.label(e) + ", " + s.label(f) +
                         " do not commute");

  s.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s.leq_[static_cast<size_t>(a) * n + b] =
          (s.mul(b, s.mul(s.inv_[a], a)) == a) ? 1 : 0;

  // the order must agree with both idempotent-factor reformulations
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool left = false, right = false;
      for (int e : s.idems_) {
        left = left || s.mul(e, b) == a;
        right = right || s.mul(b, e) == a;
      }
      internal_check(left == s.leq(a, b) && right == s.leq(a, b),
                     "natural order reformulations disagree at (" +
                         s.label(a) + ", " + s.label(b) + ")");
    }
  }
  return s;
}

IndexSet idempotents(const FiniteInverseSemigroup& s) { return s.idempotents(); }

bool natural_leq(const FiniteInverseSemigroup& s, int a, int b) {
  return s.leq(a, b);
}

std::optional<int> compatible_meet(const FiniteInverseSemigroup& s, int a,
                                   int b) {
  if (!s.is_idempotent(s.mul(s.inv(a), b)) ||
      !s.is_idempotent(s.mul(a, s.inv(b))))
    return std::nullopt;
  int m = s.mul(s.mul(a, s.inv(b)), b);
  int m2 = s.mul(s.mul(b, s.inv(a)), a);
  internal_check(m == m2, "meet formulas disagree for compatible " +
                              s.label(a) + ", " + s.label(b));
  internal_check(s.leq(m, a) && s.leq(m, b),
                 "meet is not a lower bound of " + s.label(a) + ", " + s.label(b));
  return m;
}

Congruence validate_congruence(const FiniteInverseSemigroup& s,
                               const std::vector<IndexSet>& classes) {
  const int n = s.size();
  std::vector<int> class_of(n, -1);
  for (const auto& cl : classes) {
    if (cl.empty()) fail("BadCongruence", "empty congruence class");
    for (int x : cl) {
      if (x < 0 || x >= n) fail("BadCongruence", "class member out of range");
      if (class_of[x] >= 0)
        fail("BadCongruence", s.label(x) + " occurs in two classes");
      class_of[x] = 0;  // mark
    }
  }
  for (int x = 0; x < n; ++x)
    if (class_of[x] < 0)
      fail("BadCongruence", s.label(x) + " not covered by any class");

  // renumber classes by minimal member, canonicalize member order
  std::vector<IndexSet> sorted = classes;
  for (auto& cl : sorted) canonicalize(cl);
  std::sort(sorted.begin(), sorted.end(),
            [](const IndexSet& a, const IndexSet& b) { return a[0] < b[0]; });
  Congruence c;
  c.classes = std::move(sorted);
  c.class_of.assign(n, -1);
  for (int i = 0; i < static_cast<int>(c.classes.size()); ++i)
    for (int x : c.classes[i]) c.class_of[x] = i;

  // compatibility: s~t implies su~tu and us~ut for every u; by transitivity
  // this gives the condition on all quadruples
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (c.class_of[a] != c.class_of[b]) continue;
      for (int u = 0; u < n; ++u) {
        if (c.class_of[s.mul(a, u)] != c.class_of[s.mul(b, u)] ||
            c.class_of[s.mul(u, a)] != c.class_of[s.mul(u, b)])
          fail("NotCompatible",
               str("classes of ", s.label(a), "~", s.label(b),
                   " split when multiplied by ", s.label(u)));
      }
    }
  }
  return c;
}

Congruence equality_congruence(const FiniteInverseSemigroup& s) {
  std::vector<IndexSet> classes;
  for (int i = 0; i < s.size(); ++i) classes.push_back({i});
  return validate_congruence(s, classes);
}

Congruence min_group_congruence(const FiniteInverseSemigroup& s) {
  const int n = s.size();
  // related iff a common lower bound exists
  auto related = [&](int a, int b) {
    for (int r = 0; r < n; ++r)
      if (s.leq(r, a) && s.leq(r, b)) return true;
    return false;
  };
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  // the closure must not have added pairs beyond the raw relation
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (uf.find(a) == uf.find(b) && !related(a, b))
        fail("NotTransitiveBug",
             str("common-lower-bound relation not transitive at (", s.label(a),
                 ", ", s.label(b), ")"));

  Partition p = partition_from(uf);
  Congruence c = validate_congruence(s, p.classes);
  if (is_e_unitary(s)) {
    QuotientResult q = quotient(s, c);
    internal_check(is_group(q.quotient),
                   "quotient by the minimum group congruence is not a group "
                   "for an E-unitary semigroup");
  }
  return c;
}

bool is_e_unitary(const FiniteInverseSemigroup& s) {
  for (int e : s.idempotents())
    for (int a = 0; a < s.size(); ++a)
      if (s.leq(e, a) && !s.is_idempotent(a)) return false;
  return true;
}

bool is_idempotent_pure(const FiniteInverseSemigroup& s, const Congruence& c) {
  for (int e : s.idempotents())
    for (int a = 0; a < s.size(); ++a)
      if (c.class_of[a] == c.class_of[e] && !s.is_idempotent(a)) return false;
  return true;
}

QuotientResult quotient(const FiniteInverseSemigroup& s, const Congruence& c) {
  const int k = c.size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i][j] = c.class_of[s.mul(c.classes[i][0], c.classes[j][0])];

  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("[" + s.label(c.classes[i][0]) + "]");

  QuotientResult out;
  try {
    out.quotient = validate_inverse_semigroup(table, labels,
                                              std::max(k, kDefaultSemigroupCap));
  } catch (const Error& e) {
    fail("QuotientNotInverse", e.what());
  }
  out.projection = c.class_of;
  for (int a = 0; a < s.size(); ++a)
    internal_check(out.projection[s.inv(a)] ==
                       out.quotient.inv(out.projection[a]),
                   "projection does not intertwine inversion at " + s.label(a));
  return out;
}

bool is_group(const FiniteInverseSemigroup& s) {
  return s.idempotents().size() == 1;
}

}  // namespace semidyn
