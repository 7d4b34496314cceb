#include "semidyn/partial_action.hpp"

#include <algorithm>

namespace semidyn {

namespace {

[[noreturn]] void axiom_violation(const PartialAction&, const std::string& msg) {
  fail("AxiomViolation", msg);
}

}  // namespace

PartialAction validate_partial_action(FiniteInverseSemigroup sg,
                                      FiniteSpace space,
                                      std::vector<PartialBijection> theta) {
  const int n = sg.size();
  const int m = space.size();
  if (static_cast<int>(theta.size()) != n)
    fail("BadAction", "need one partial bijection per semigroup element");
  for (const auto& t : theta)
    if (t.space_size() != m)
      fail("BadAction", "partial bijection on the wrong space");

  PartialAction a;
  a.sg_ = std::move(sg);
  a.space_ = std::move(space);
  a.theta_ = std::move(theta);
  const auto& S = a.sg_;

  // (i)
  for (int s = 0; s < n; ++s)
    if (a.theta_[S.inv(s)] != a.theta_[s].inverse())
      axiom_violation(a, str("(i): theta[", S.label(S.inv(s)),
                             "] is not the inverse of theta[", S.label(s), "]"));

  // (ii), and the genuineness flag
  a.genuine_ = true;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      PartialBijection c = PartialBijection::compose(a.theta_[s], a.theta_[t]);
      const PartialBijection& st = a.theta_[S.mul(s, t)];
      if (!c.restriction_of(st))
        axiom_violation(a, str("(ii): theta[", S.label(s), "] o theta[",
                               S.label(t), "] does not restrict theta[",
                               S.label(S.mul(s, t)), "]"));
      if (!(c == st)) a.genuine_ = false;
    }
  }

  // (iii)
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (S.leq(s, t) && !a.theta_[s].restriction_of(a.theta_[t]))
        axiom_violation(a, str("(iii): ", S.label(s), " <= ", S.label(t),
                               " but theta[", S.label(s),
                               "] does not restrict theta[", S.label(t), "]"));

  // (iv)
  std::vector<char> covered(m, 0);
  for (int e : S.idempotents())
    for (int p : a.theta_[e].image()) covered[p] = 1;
  for (int p = 0; p < m; ++p)
    if (!covered[p])
      fail("NotNondegenerate",
           "point " + a.space_.points[p] + " is not in any idempotent image");

  // derived facts
  for (int e : S.idempotents())
    internal_check(
        a.theta_[e] == PartialBijection::identity_on(m, a.theta_[e].domain()),
        "idempotent " + S.label(e) + " does not act as a partial identity");
  for (int s = 0; s < n; ++s)
    internal_check(a.theta_[s].domain() == a.theta_[S.inv(s)].image(),
                   "dom theta_s != im theta_s# at " + S.label(s));
  for (int t = 0; t < n; ++t) {
    IndexSet im_t = a.theta_[t].image();
    for (int s = 0; s < n; ++s) {
      IndexSet moved;  // theta_t(im theta_s ∩ dom theta_t)
      for (int p : a.theta_[s].image())
        if (a.theta_[t].defined_at(p)) moved.push_back(a.theta_[t].apply(p));
      canonicalize(moved);
      internal_check(
          is_subset(set_intersection(im_t, moved), a.theta_[S.mul(t, s)].image()),
          "image composition bound fails at (" + S.label(t) + ", " + S.label(s) + ")");
    }
  }
  return a;
}

IndexSet applicable(const PartialAction& a, int sigma) {
  IndexSet out;
  for (int s = 0; s < a.sg().size(); ++s)
    if (a.theta(s).defined_at(sigma)) out.push_back(s);
  // closure under the composition rule
  for (int t : out) {
    int tau = a.theta(t).apply(sigma);
    for (int s = 0; s < a.sg().size(); ++s)
      if (a.theta(s).defined_at(tau))
        internal_check(contains(out, a.sg().mul(s, t)),
                       "applicable set not closed under composition at point " +
                           a.space().points[sigma]);
  }
  return out;
}

namespace {

UnionFind orbit_union_find(const PartialAction& a) {
  const int m = a.space().size();
  UnionFind uf(m);
  for (int s = 0; s < a.sg().size(); ++s)
    for (int p = 0; p < m; ++p)
      if (a.theta(s).defined_at(p)) uf.unite(p, a.theta(s).apply(p));
  // reachability must already be an equivalence: reflexive by (iv),
  // symmetric by (i), transitive by (ii)
  auto reaches = [&](int p, int q) {
    for (int s = 0; s < a.sg().size(); ++s)
      if (a.theta(s).defined_at(p) && a.theta(s).apply(p) == q) return true;
    return false;
  };
  for (int p = 0; p < m; ++p) {
    internal_check(reaches(p, p), "orbit relation not reflexive");
    for (int q = 0; q < m; ++q)
      if (uf.find(p) == uf.find(q))
        internal_check(reaches(p, q) && reaches(q, p),
                       "orbit relation is not an equivalence relation");
  }
  return uf;
}

}  // namespace

IndexSet orbit(const PartialAction& a, int sigma) {
  UnionFind uf = orbit_union_find(a);
  IndexSet out;
  for (int p = 0; p < a.space().size(); ++p)
    if (uf.find(p) == uf.find(sigma)) out.push_back(p);
  return out;
}

std::vector<IndexSet> orbits(const PartialAction& a) {
  UnionFind uf = orbit_union_find(a);
  return partition_from(uf).classes;
}

bool is_invariant_direct(const PartialAction& a, const IndexSet& m) {
  for (int s = 0; s < a.sg().size(); ++s)
    for (int p : m)
      if (a.theta(s).defined_at(p) && !contains(m, a.theta(s).apply(p)))
        return false;
  return true;
}

bool is_invariant(const PartialAction& a, const IndexSet& m) {
  bool direct = is_invariant_direct(a, m);
  bool by_orbits = true;
  for (const IndexSet& orb : orbits(a)) {
    IndexSet inter = set_intersection(orb, m);
    if (!inter.empty() && inter != orb) {
      by_orbits = false;
      break;
    }
  }
  internal_check(direct == by_orbits,
                 "invariance predicate disagrees with union-of-orbits test");
  return direct;
}

bool point_equiv(const PartialAction& a, int sigma, int s, int t) {
  if (!a.theta(s).defined_at(sigma))
    fail("NotApplicable", a.sg().label(s) + " is not applicable to " +
                              a.space().points[sigma]);
  if (!a.theta(t).defined_at(sigma))
    fail("NotApplicable", a.sg().label(t) + " is not applicable to " +
                              a.space().points[sigma]);
  for (int r = 0; r < a.sg().size(); ++r) {
    if (a.theta(r).defined_at(sigma) && a.sg().leq(r, s) && a.sg().leq(r, t)) {
      internal_check(a.theta(s).apply(sigma) == a.theta(t).apply(sigma),
                     "equivalent elements disagree at " + a.space().points[sigma]);
      return true;
    }
  }
  return false;
}

GermClassTable germ_classes(const PartialAction& a, int sigma) {
  GermClassTable g;
  g.base_point = sigma;
  g.applicable = applicable(a, sigma);
  const int k = static_cast<int>(g.applicable.size());
  UnionFind uf(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (point_equiv(a, sigma, g.applicable[i], g.applicable[j]))
        uf.unite(i, j);
  // transitivity (a theorem here) must make union-find exact
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      internal_check(
          (uf.find(i) == uf.find(j)) ==
              point_equiv(a, sigma, g.applicable[i], g.applicable[j]),
          "point equivalence is not transitive at " + a.space().points[sigma]);

  Partition p = partition_from(uf);
  g.class_of_element.assign(a.sg().size(), -1);
  for (const IndexSet& cl : p.classes) {
    IndexSet members;
    for (int i : cl) members.push_back(g.applicable[i]);
    g.classes.push_back(members);
  }
  // applicable is sorted, so classes are already keyed by minimal member
  for (int c = 0; c < static_cast<int>(g.classes.size()); ++c)
    for (int s : g.classes[c]) g.class_of_element[s] = c;
  return g;
}

}  // namespace semidyn
