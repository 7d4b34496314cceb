#include "semidyn/recurrence.hpp"

namespace semidyn {

IndexSet naive_recurrence(const PartialAction& a, const IndexSet& m,
                          const IndexSet& n) {
  const auto& S = a.sg();
  IndexSet out;
  for (int s = 0; s < S.size(); ++s) {
    for (int p : m) {
      if (a.theta(s).defined_at(p) && contains(n, a.theta(s).apply(p))) {
        out.push_back(s);
        break;
      }
    }
  }

  // upward closed in the natural order
  for (int s : out)
    for (int t = 0; t < S.size(); ++t)
      if (S.leq(s, t))
        internal_check(contains(out, t),
                       "recurrence set not upward closed at " + S.label(t));

  // for a single recurrent point, an inverse subsemigroup
  if (m.size() == 1 && n.size() == 1 && m == n) {
    for (int s : out) {
      internal_check(contains(out, S.inv(s)),
                     "recurrence set at a point not closed under inverses");
      for (int t : out)
        internal_check(contains(out, S.mul(s, t)),
                       "recurrence set at a point not closed under products");
    }
  }
  return out;
}

PointRecurrence recurrence(const PartialAction& a, int sigma, const IndexSet& n) {
  PointRecurrence out;
  out.germs = germ_classes(a, sigma);
  for (int s : naive_recurrence(a, {sigma}, n)) {
    int c = out.germs.class_of(s);
    internal_check(c >= 0, "recurrent element not applicable");
    insert_sorted(out.classes, c);
  }
  return out;
}

SetRecurrence set_recurrence(const PartialAction& a, const IndexSet& m,
                             const IndexSet& n) {
  SetRecurrence out;
  out.congruence = min_group_congruence(a.sg());
  for (int s : naive_recurrence(a, m, n))
    insert_sorted(out.classes, out.congruence.class_of[s]);

  if (is_e_unitary(a.sg())) {
    // with E-unitary base the pointwise classes embed into the global ones,
    // and their union over M recovers the same set
    IndexSet from_points;
    for (int sigma : m) {
      PointRecurrence pr = recurrence(a, sigma, n);
      std::vector<int> seen(out.congruence.size(), 0);
      for (int c : pr.classes) {
        int rep = pr.germs.classes[c][0];
        int g = out.congruence.class_of[rep];
        for (int member : pr.germs.classes[c])
          internal_check(out.congruence.class_of[member] == g,
                         "pointwise class split by the global congruence");
        internal_check(!seen[g],
                       "two pointwise classes map to one global class over an "
                       "E-unitary semigroup");
        seen[g] = 1;
        insert_sorted(from_points, g);
      }
    }
    internal_check(from_points == out.classes,
                   "global recurrence classes disagree with the pointwise union");
  }
  return out;
}

namespace {

bool globally_related(const FiniteInverseSemigroup& s, int a, int b) {
  for (int r = 0; r < s.size(); ++r)
    if (s.leq(r, a) && s.leq(r, b)) return true;
  return false;
}

}  // namespace

CheckReport check_lemma_e_unitary(const PartialAction& a,
                                  const std::string& instance_id) {
  CheckReport rep("lemma_e_unitary", instance_id);
  if (!is_e_unitary(a.sg()))
    fail("PreconditionNotEUnitary",
         "lemma check requires an E-unitary semigroup");
  for (int sigma = 0; sigma < a.space().size(); ++sigma) {
    IndexSet app = applicable(a, sigma);
    for (int s : app)
      for (int t : app)
        rep.require(point_equiv(a, sigma, s, t) ==
                        globally_related(a.sg(), s, t),
                    str("sigma=", a.space().points[sigma], " s=",
                        a.sg().label(s), " t=", a.sg().label(t)));
  }
  return rep;
}

CheckReport check_point_equiv_implies_global(const PartialAction& a,
                                             const std::string& instance_id) {
  CheckReport rep("point_equiv_implies_global", instance_id);
  for (int sigma = 0; sigma < a.space().size(); ++sigma) {
    IndexSet app = applicable(a, sigma);
    for (int s : app)
      for (int t : app)
        if (point_equiv(a, sigma, s, t))
          rep.require(globally_related(a.sg(), s, t),
                      str("sigma=", a.space().points[sigma], " s=",
                          a.sg().label(s), " t=", a.sg().label(t)));
  }
  return rep;
}

}  // namespace semidyn
