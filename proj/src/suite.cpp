#include "semidyn/suite.hpp"

#include <algorithm>

#include "semidyn/bisection.hpp"
#include "semidyn/builtins.hpp"
#include "semidyn/expansion.hpp"
#include "semidyn/germ_groupoid.hpp"
#include "semidyn/quotient_action.hpp"
#include "semidyn/recurrence.hpp"

namespace semidyn {

namespace {

uint64_t fnv64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// deterministic parameter batteries, scaled to the space size
struct Battery {
  std::vector<IndexSet> targets;                      // N
  std::vector<std::pair<IndexSet, IndexSet>> pairs;   // (M, N)
  IndexSet sigmas;
  IndexSet cuci_sigmas;
};

std::vector<IndexSet> power_set(int m) {
  std::vector<IndexSet> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    IndexSet s;
    for (int p = 0; p < m; ++p)
      if (mask & (1 << p)) s.push_back(p);
    out.push_back(s);
  }
  return out;
}

Battery make_battery(int m, Rng& rng) {
  Battery bt;
  if (m <= 6) {
    bt.targets = power_set(m);
  } else {
    bt.targets.push_back({});
    bt.targets.push_back(full_set(m));
    int singles = m <= 12 ? m : 4;
    for (int p = 0; p < singles; ++p) bt.targets.push_back({p});
    if (m <= 12) {
      for (int size = 2; size < m; ++size)
        bt.targets.push_back(random_subset(rng, m, size));
    } else {
      for (int size : {2, m / 2, m - 1})
        bt.targets.push_back(random_subset(rng, m, size));
    }
  }

  if (m <= 4) {
    for (const IndexSet& a : power_set(m))
      for (const IndexSet& b : power_set(m)) bt.pairs.push_back({a, b});
  } else {
    std::vector<IndexSet> small;
    small.push_back({});
    small.push_back(full_set(m));
    for (int p = 0; p < std::min(m, 3); ++p) small.push_back({p});
    small.push_back(random_subset(rng, m, m / 2));
    for (const IndexSet& a : small)
      for (const IndexSet& b : small) bt.pairs.push_back({a, b});
  }

  bt.sigmas = full_set(std::min(m, 12));
  bt.cuci_sigmas = full_set(std::min(m, 4));
  return bt;
}

using Reports = std::vector<CheckReport>;

void axioms_suite(const InstanceBundle& b, uint64_t, Reports& out) {
  for (const auto& [name, sg] : b.semigroups) {
    CheckReport rep("validate_semigroup", name);
    rep.record_sizes("elements", sg.size(), sg.size());
    rep.record_sizes("idempotents",
                     static_cast<long long>(sg.idempotents().size()),
                     static_cast<long long>(sg.idempotents().size()));
    rep.note(is_e_unitary(sg) ? "e-unitary" : "not-e-unitary");
    if (is_group(sg)) rep.note("group");
    out.push_back(rep);
  }
  for (const auto& [name, na] : b.actions) {
    CheckReport rep("validate_action", name);
    rep.record_sizes("space", na.action.space().size(), na.action.space().size());
    rep.note(na.action.genuine() ? "genuine" : "partial");
    out.push_back(rep);
  }
  for (const auto& [name, g] : b.groupoids) {
    CheckReport rep("validate_groupoid", name);
    rep.record_sizes("arrows", g.size(), g.size());
    rep.record_sizes("units", static_cast<long long>(g.units().size()),
                     static_cast<long long>(g.units().size()));
    out.push_back(rep);
  }
  for (const auto& [name, nga] : b.groupoid_actions) {
    CheckReport rep("validate_groupoid_action", name);
    rep.record_sizes("space", nga.action.space().size(),
                     nga.action.space().size());
    out.push_back(rep);
  }

  // negative battery: structures the validators must reject; skipped for an
  // empty bundle so that an empty run stays empty
  if (!b.semigroups.empty() || !b.actions.empty() || !b.groupoids.empty()) {
    CheckReport rep("reject_bad_tables", "builtin");
    auto expect_code = [&](const std::string& code, auto&& fn) {
      try {
        fn();
        rep.require(false, "accepted a structure that must be rejected: " + code);
      } catch (const Error& e) {
        rep.require(e.code() == code,
                    "expected " + code + ", got " + e.code());
      }
    };
    expect_code("NonUniqueInverse", [] {
      validate_inverse_semigroup({{0, 0}, {1, 1}});  // left-zero
    });
    expect_code("NotAssociative",
                [] { validate_inverse_semigroup({{0, 0}, {1, 0}}); });
    expect_code("NotNondegenerate", [] {
      FiniteInverseSemigroup z2 = cyclic_group(2);
      std::vector<PartialBijection> t(2, PartialBijection::identity_on(2, {0}));
      validate_partial_action(z2, make_space({"x", "y"}), t);
    });
    out.push_back(rep);
  }
}

void recurrence_suite(const InstanceBundle& b, uint64_t seed, Reports& out) {
  for (const auto& [name, na] : b.actions) {
    const PartialAction& a = na.action;
    Rng rng(seed ^ fnv64(name));
    Battery bt = make_battery(a.space().size(), rng);

    for (int sigma : bt.sigmas) {
      for (const IndexSet& n : bt.targets) {
        CheckReport rep("recurrence_sets", name,
                        str("sigma=", a.space().points[sigma],
                            " N=", a.space().format_subset(n)));
        IndexSet naive = naive_recurrence(a, {sigma}, n);
        PointRecurrence pr = recurrence(a, sigma, n);
        SetRecurrence sr = set_recurrence(a, {sigma}, n);
        rep.record_sizes("naive-vs-classes",
                         static_cast<long long>(naive.size()),
                         static_cast<long long>(pr.classes.size()));
        rep.record_sizes("global-classes",
                         static_cast<long long>(sr.classes.size()),
                         static_cast<long long>(sr.classes.size()));
        rep.require(pr.classes.size() <= naive.size(),
                    "more classes than elements");
        rep.require(naive.empty() == pr.classes.empty(),
                    "classes and naive set disagree on emptiness");
        out.push_back(rep);
      }
    }
    for (const auto& [m, n] : bt.pairs) {
      CheckReport rep("set_recurrence", name,
                      str("M=", a.space().format_subset(m),
                          " N=", a.space().format_subset(n)));
      SetRecurrence sr = set_recurrence(a, m, n);
      rep.record_sizes("classes", static_cast<long long>(sr.classes.size()),
                       static_cast<long long>(sr.classes.size()));
      out.push_back(rep);
    }
    if (is_e_unitary(a.sg())) out.push_back(check_lemma_e_unitary(a, name));
    out.push_back(check_point_equiv_implies_global(a, name));
  }
}

void expansion_suite(const InstanceBundle& b, uint64_t seed, Reports& out) {
  for (const auto& [name, na] : b.actions) {
    const PartialAction& a = na.action;
    if (a.sg().size() > 10) continue;  // expansion sizes grow exponentially
    Rng rng(seed ^ fnv64(name));
    Battery bt = make_battery(a.space().size(), rng);

    ExpansionSemigroup ex = expansion(a.sg(), 10);
    PartialAction exp_act = expansion_action(ex, a);
    CheckReport rep("expansion", name);
    rep.record_sizes("elements",
                     static_cast<long long>(ex.elements.size()),
                     static_cast<long long>(ex.sg.size()));
    rep.note(a.sg().size() <= 4 ? "oracle-gated" : "validated");
    out.push_back(rep);

    for (const auto& [m, n] : bt.pairs)
      out.push_back(check_fusirat(ex, a, exp_act, m, n, name));
    for (int sigma : bt.sigmas)
      for (const IndexSet& n : bt.targets)
        out.push_back(check_potrivire(ex, a, exp_act, sigma, n, name));
  }
}

void quotient_suite(const InstanceBundle& b, uint64_t seed, Reports& out) {
  for (const auto& [name, na] : b.actions) {
    const PartialAction& a = na.action;
    Rng rng(seed ^ fnv64(name));
    Battery bt = make_battery(a.space().size(), rng);

    InducedAction eq = induced_action(a, equality_congruence(a.sg()));
    for (int sigma : bt.sigmas)
      for (const IndexSet& n : bt.targets)
        out.push_back(check_gramada(a, eq, sigma, n, name + "/equality"));

    if (is_e_unitary(a.sg())) {
      InducedAction mg = induced_action(a, min_group_congruence(a.sg()));
      for (int sigma : bt.sigmas)
        for (const IndexSet& n : bt.targets)
          out.push_back(check_gramada(a, mg, sigma, n, name + "/min-group"));
      out.push_back(check_hazard(a, seed ^ fnv64(name), name));
    }

    for (const auto& [cname, nc] : b.congruences) {
      if (nc.semigroup != na.semigroup) continue;
      if (!is_idempotent_pure(a.sg(), nc.congruence)) continue;
      InducedAction ind = induced_action(a, nc.congruence);
      for (int sigma : bt.sigmas)
        out.push_back(check_gramada(a, ind, sigma, full_set(a.space().size()),
                                    name + "/" + cname));
    }
  }
}

void germ_suite(const InstanceBundle& b, uint64_t seed, Reports& out) {
  for (const auto& [name, na] : b.actions) {
    const PartialAction& a = na.action;
    Rng rng(seed ^ fnv64(name));
    Battery bt = make_battery(a.space().size(), rng);

    GermGroupoid g = germ_groupoid(a);
    CheckReport rep("germ_groupoid", name);
    rep.record_sizes("arrows", g.size(), g.size());
    rep.record_sizes("units", static_cast<long long>(g.gpd.units().size()),
                     static_cast<long long>(g.gpd.units().size()));
    out.push_back(rep);

    for (const auto& [m, n] : bt.pairs) {
      out.push_back(check_aha(g, m, n, name));
      out.push_back(check_ohanesian(g, m, n, name));
    }
    out.push_back(check_enoeno(g, seed ^ fnv64(name), name));
    for (int sigma : bt.sigmas)
      for (const IndexSet& n : bt.targets)
        out.push_back(check_bucuros(g, sigma, n, name));
    for (int sigma : bt.cuci_sigmas)
      out.push_back(check_cuci(g, sigma, seed ^ fnv64(name), name));
    out.push_back(gamma_global(g, name).report);
  }
}

void gaction_suite(const InstanceBundle& b, uint64_t seed, Reports& out) {
  for (const auto& [name, nga] : b.groupoid_actions) {
    const GroupoidAction& ga = nga.action;
    const FiniteGroupoid* gpd = b.find_groupoid(nga.groupoid);
    internal_check(gpd != nullptr, "groupoid action without its groupoid");
    if (gpd->size() > kDefaultBisectionCap) continue;

    Rng rng(seed ^ fnv64(name));
    Battery bt = make_battery(ga.space().size(), rng);

    BisectionSemigroup bis = bisections(*gpd);
    PartialAction attached = bis_action(bis, ga);
    CheckReport rep("bisections", nga.groupoid);
    rep.record_sizes("elements", bis.sg.size(), bis.sg.size());
    rep.record_sizes(
        "idempotents", static_cast<long long>(bis.sg.idempotents().size()),
        1LL << gpd->units().size());
    rep.note(attached.genuine() ? "attached-genuine" : "attached-partial");
    out.push_back(rep);

    for (const auto& [m, n] : bt.pairs) {
      CheckReport trep("tilde_recurrence", name,
                       str("M=", ga.space().format_subset(m),
                           " N=", ga.space().format_subset(n)));
      IndexSet rec = tilde_recurrence(ga, m, n);
      trep.record_sizes("arrows", static_cast<long long>(rec.size()),
                        static_cast<long long>(rec.size()));
      out.push_back(trep);
    }

    out.push_back(check_oneon(bis, ga, attached, seed ^ fnv64(name), name));
    for (int sigma : bt.sigmas)
      for (const IndexSet& n : bt.targets)
        out.push_back(check_vertij(bis, ga, attached, sigma, n, name));
    for (size_t i = 0; i < bt.pairs.size(); ++i) {
      int sigma = bt.sigmas[i % bt.sigmas.size()];
      out.push_back(check_onegsion(bis, ga, attached, sigma, bt.pairs[i].first,
                                   bt.pairs[i].second, seed ^ fnv64(name),
                                   name));
    }
  }
}

}  // namespace

bool known_suite(const std::string& suite) {
  for (const char* s : {"axioms", "recurrence", "expansion", "quotient",
                        "germ", "gaction", "all"})
    if (suite == s) return true;
  return false;
}

std::vector<CheckReport> run_suite(const InstanceBundle& bundle,
                                   const std::string& suite, uint64_t seed) {
  if (!known_suite(suite)) fail("UnknownSuite", "no suite named '" + suite + "'");
  Reports out;
  if (suite == "axioms" || suite == "all") axioms_suite(bundle, seed, out);
  if (suite == "recurrence" || suite == "all") recurrence_suite(bundle, seed, out);
  if (suite == "expansion" || suite == "all") expansion_suite(bundle, seed, out);
  if (suite == "quotient" || suite == "all") quotient_suite(bundle, seed, out);
  if (suite == "germ" || suite == "all") germ_suite(bundle, seed, out);
  if (suite == "gaction" || suite == "all") gaction_suite(bundle, seed, out);
  return out;
}

}  // namespace semidyn
