#include "semidyn/quotient_action.hpp"

namespace semidyn {

InducedAction induced_action(const PartialAction& base, const Congruence& c) {
  const auto& s = base.sg();
  if (!is_idempotent_pure(s, c))
    fail("NotIdempotentPure",
         "induced actions need an idempotent pure congruence");

  InducedAction out;
  out.congruence = c;
  out.quot = quotient(s, c);
  const int m = base.space().size();

  // a class acts by whichever member is defined; conflicts are data errors
  std::vector<PartialBijection> theta;
  for (const IndexSet& cls : c.classes) {
    std::vector<int> img(m, -1);
    std::vector<int> who(m, -1);
    for (int member : cls) {
      for (int p : base.theta(member).domain()) {
        int q = base.theta(member).apply(p);
        if (img[p] >= 0 && img[p] != q)
          fail("WellDefinednessFailure",
               str("members ", s.label(who[p]), " and ", s.label(member),
                   " of one class disagree at ", base.space().points[p]));
        img[p] = q;
        who[p] = member;
      }
    }
    theta.push_back(PartialBijection::from_images(std::move(img)));
  }
  out.action =
      validate_partial_action(out.quot.quotient, base.space(), std::move(theta));

  // the induced maps restrict to the original ones member by member
  for (int x = 0; x < s.size(); ++x)
    internal_check(
        base.theta(x).restriction_of(out.action.theta(out.quot.projection[x])),
        "class action does not extend the member action at " + s.label(x));
  // and the class domain is exactly the union of member domains
  for (int k = 0; k < c.size(); ++k) {
    IndexSet dom;
    for (int member : c.classes[k])
      dom = set_union(dom, base.theta(member).domain());
    internal_check(out.action.theta(k).domain() == dom,
                   "class domain differs from the union of member domains");
  }
  return out;
}

CheckReport check_gramada(const PartialAction& base, const InducedAction& ind,
                          int sigma, const IndexSet& n,
                          const std::string& instance_id) {
  CheckReport rep("gramada", instance_id,
                  str("sigma=", base.space().points[sigma],
                      " N=", base.space().format_subset(n)));
  const auto& proj = ind.quot.projection;

  // orbits and invariant sets agree
  rep.require(orbits(base) == orbits(ind.action), "orbit partitions differ");
  for (int mask = 0;
       mask < (1 << std::min(base.space().size(), 6)); ++mask) {
    IndexSet m;
    for (int p = 0; p < base.space().size(); ++p)
      if (mask & (1 << p)) m.push_back(p);
    rep.require(
        is_invariant_direct(base, m) == is_invariant_direct(ind.action, m),
        "invariance differs at " + base.space().format_subset(m));
  }

  // applicable sets and naive recurrence sets project onto each other
  IndexSet app_base = applicable(base, sigma);
  IndexSet app_ind = applicable(ind.action, sigma);
  IndexSet app_proj;
  for (int x : app_base) insert_sorted(app_proj, proj[x]);
  rep.require_set_equal("applicable-projection", app_proj, app_ind);

  IndexSet rec_base = naive_recurrence(base, {sigma}, n);
  IndexSet rec_ind = naive_recurrence(ind.action, {sigma}, n);
  IndexSet rec_proj;
  for (int x : rec_base) insert_sorted(rec_proj, proj[x]);
  rep.require_set_equal("recurrence-projection", rec_proj, rec_ind);

  // the class map is well-defined and surjective, and carries the pointwise
  // recurrence classes onto the pointwise recurrence classes
  GermClassTable g_base = germ_classes(base, sigma);
  GermClassTable g_ind = germ_classes(ind.action, sigma);
  for (int s : app_base)
    for (int t : app_base)
      if (g_base.class_of(s) == g_base.class_of(t))
        rep.require(g_ind.class_of(proj[s]) == g_ind.class_of(proj[t]),
                    str("class map splits a class at s=", base.sg().label(s),
                        " t=", base.sg().label(t)));
  IndexSet surj;
  for (int s : app_base) insert_sorted(surj, g_ind.class_of(proj[s]));
  rep.require_set_equal("class-map-surjective", surj,
                        full_set(g_ind.size()));

  PointRecurrence pr_base = recurrence(base, sigma, n);
  PointRecurrence pr_ind = recurrence(ind.action, sigma, n);
  IndexSet mapped;
  for (int cls : pr_base.classes)
    insert_sorted(mapped, g_ind.class_of(proj[pr_base.germs.classes[cls][0]]));
  rep.require_set_equal("recurrence-class-image", mapped, pr_ind.classes);
  return rep;
}

namespace {

std::vector<IndexSet> target_battery(int m, uint64_t seed) {
  std::vector<IndexSet> out;
  if (m <= 6) {
    for (int mask = 0; mask < (1 << m); ++mask) {
      IndexSet n;
      for (int p = 0; p < m; ++p)
        if (mask & (1 << p)) n.push_back(p);
      out.push_back(n);
    }
    return out;
  }
  out.push_back({});
  for (int p = 0; p < m; ++p) out.push_back({p});
  out.push_back(full_set(m));
  Rng rng(seed);
  for (int size = 2; size < m; ++size) out.push_back(random_subset(rng, m, size));
  return out;
}

}  // namespace

CheckReport check_hazard(const PartialAction& base, uint64_t seed,
                         const std::string& instance_id) {
  CheckReport rep("hazard", instance_id);
  if (!is_e_unitary(base.sg()))
    fail("PreconditionNotEUnitary", "the hazard check needs an E-unitary base");

  InducedAction ind = induced_action(base, min_group_congruence(base.sg()));
  internal_check(is_group(ind.quot.quotient),
                 "minimum group congruence quotient is not a group");
  const auto& proj = ind.quot.projection;

  std::vector<IndexSet> battery = target_battery(base.space().size(), seed);
  if (base.space().size() > 6) rep.seed = seed;

  for (int sigma = 0; sigma < base.space().size(); ++sigma) {
    GermClassTable g_base = germ_classes(base, sigma);
    GermClassTable g_ind = germ_classes(ind.action, sigma);

    // on a group, pointwise equivalence is equality
    for (const IndexSet& cls : g_ind.classes)
      rep.require(cls.size() == 1,
                  "pointwise classes of a group action are singletons");

    // injectivity of the class map
    for (int s : g_base.applicable)
      for (int t : g_base.applicable)
        rep.require((g_base.class_of(s) == g_base.class_of(t)) ==
                        (g_ind.class_of(proj[s]) == g_ind.class_of(proj[t])),
                    str("class map not injective at sigma=",
                        base.space().points[sigma]));

    for (const IndexSet& n : battery) {
      PointRecurrence pr_base = recurrence(base, sigma, n);
      PointRecurrence pr_ind = recurrence(ind.action, sigma, n);
      rep.record_sizes(
          str("classes(sigma=", base.space().points[sigma],
              ",N=", base.space().format_subset(n), ")"),
          static_cast<long long>(pr_base.classes.size()),
          static_cast<long long>(pr_ind.classes.size()));
      rep.require(pr_base.classes.size() == pr_ind.classes.size(),
                  str("class counts differ at sigma=",
                      base.space().points[sigma],
                      " N=", base.space().format_subset(n)));
    }
  }
  return rep;
}

}  // namespace semidyn
