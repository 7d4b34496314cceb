#include "semidyn/bisection.hpp"

#include <map>

#include "semidyn/recurrence.hpp"

namespace semidyn {

namespace {

IndexSet source_units(const FiniteGroupoid& g, const IndexSet& arrows) {
  IndexSet out;
  for (int x : arrows) insert_sorted(out, g.d(x));
  return out;
}

IndexSet range_units(const FiniteGroupoid& g, const IndexSet& arrows) {
  IndexSet out;
  for (int x : arrows) insert_sorted(out, g.r(x));
  return out;
}

}  // namespace

int BisectionSemigroup::index_of(const IndexSet& arrows) const {
  for (int i = 0; i < static_cast<int>(bisections.size()); ++i)
    if (bisections[i] == arrows) return i;
  return -1;
}

BisectionSemigroup bisections(const FiniteGroupoid& g, int cap) {
  const int k = g.size();
  if (k > cap)
    fail("CapExceeded", str("groupoid with ", k, " arrows exceeds cap ", cap));

  BisectionSemigroup out;
  out.gpd = g;
  std::map<long long, int> index_of_mask;
  for (long long mask = 0; mask < (1LL << k); ++mask) {
    IndexSet arrows;
    IndexSet ds, rs;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      if (!(mask & (1LL << x))) continue;
      if (contains(ds, g.d(x)) || contains(rs, g.r(x)))
        ok = false;
      else {
        insert_sorted(ds, g.d(x));
        insert_sorted(rs, g.r(x));
        arrows.push_back(x);
      }
    }
    if (!ok) continue;
    index_of_mask[mask] = static_cast<int>(out.bisections.size());
    out.bisections.push_back(arrows);
  }

  auto mask_of = [&](const IndexSet& arrows) {
    long long mask = 0;
    for (int x : arrows) mask |= 1LL << x;
    return mask;
  };

  const int n = static_cast<int>(out.bisections.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(g.format_subset(out.bisections[i]));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IndexSet prod;
      for (int x : out.bisections[i])
        for (int y : out.bisections[j])
          if (g.d(x) == g.r(y)) insert_sorted(prod, g.compose(x, y));
      auto it = index_of_mask.find(mask_of(prod));
      internal_check(it != index_of_mask.end(),
                     "product of bisections is not a bisection");
      table[i][j] = it->second;
    }
  }

  out.sg = validate_inverse_semigroup(table, labels,
                                      std::max(n, kDefaultSemigroupCap));

  // inverses are arrowwise inverses
  for (int i = 0; i < n; ++i) {
    IndexSet inv_arrows;
    for (int x : out.bisections[i]) insert_sorted(inv_arrows, g.inverse(x));
    internal_check(out.sg.inv(i) == out.index_of(inv_arrows),
                   "semigroup inverse is not the arrowwise inverse");
    // source and range unit sets are recovered by the defining products
    internal_check(out.bisections[out.sg.mul(out.sg.inv(i), i)] ==
                       source_units(g, out.bisections[i]),
                   "A#A is not the source unit set");
    internal_check(out.bisections[out.sg.mul(i, out.sg.inv(i))] ==
                       range_units(g, out.bisections[i]),
                   "AA# is not the range unit set");
  }

  // idempotents are exactly the unit subsets
  IndexSet units = g.units();
  for (int i = 0; i < n; ++i)
    internal_check(out.sg.is_idempotent(i) ==
                       is_subset(out.bisections[i], units),
                   "idempotent bisections are not the unit subsets");
  internal_check(out.sg.idempotents().size() ==
                     (size_t{1} << units.size()),
                 "idempotent count is not 2^|units|");
  return out;
}

PartialAction bis_action(const BisectionSemigroup& bis,
                         const GroupoidAction& ga) {
  internal_check(bis.gpd == ga.gpd(), "bisections of a different groupoid");
  const auto& g = bis.gpd;
  const int m = ga.space().size();

  std::vector<PartialBijection> theta;
  for (const IndexSet& arrows : bis.bisections) {
    std::vector<int> arrow_at_unit(g.size(), -1);
    for (int x : arrows) arrow_at_unit[g.d(x)] = x;
    std::vector<int> img(m, -1);
    for (int p = 0; p < m; ++p) {
      int x = arrow_at_unit[ga.anchor(p)];
      if (x >= 0) img[p] = ga.apply(x, p);
    }
    theta.push_back(PartialBijection::from_images(std::move(img)));
  }

  PartialAction act = validate_partial_action(bis.sg, ga.space(), std::move(theta));
  internal_check(act.genuine(), "bisection action must be genuine");

  // images are the anchor preimages of the range unit sets
  for (int i = 0; i < bis.sg.size(); ++i) {
    IndexSet expect;
    IndexSet ranges = range_units(g, bis.bisections[i]);
    for (int p = 0; p < m; ++p)
      if (contains(ranges, ga.anchor(p))) expect.push_back(p);
    internal_check(act.theta(i).image() == expect,
                   "bisection image is not the anchored range preimage");
  }
  return act;
}

CheckReport check_oneon(const BisectionSemigroup& bis, const GroupoidAction& ga,
                        const PartialAction& attached, uint64_t seed,
                        const std::string& instance_id) {
  (void)bis;
  CheckReport rep("oneon", instance_id);
  const int m = ga.space().size();
  rep.require(orbits_gaction(ga) == orbits(attached),
              "orbit partitions differ");
  if (m <= 6) {
    for (int mask = 0; mask < (1 << m); ++mask) {
      IndexSet set;
      for (int p = 0; p < m; ++p)
        if (mask & (1 << p)) set.push_back(p);
      rep.require(is_invariant_gaction(ga, set) == is_invariant_direct(attached, set),
                  "invariance differs at " + ga.space().format_subset(set));
    }
  } else {
    rep.seed = seed;
    Rng rng(seed);
    for (int i = 0; i < 4096; ++i) {
      IndexSet set;
      for (int p = 0; p < m; ++p)
        if (rng() & 1) set.push_back(p);
      rep.require(is_invariant_gaction(ga, set) == is_invariant_direct(attached, set),
                  "invariance differs at " + ga.space().format_subset(set));
    }
  }
  return rep;
}

namespace {

int unique_arrow_at(const BisectionSemigroup& bis, int element, int unit) {
  int found = -1;
  for (int x : bis.bisections[element])
    if (bis.gpd.d(x) == unit) {
      internal_check(found < 0, "two arrows of one bisection share a source");
      found = x;
    }
  return found;
}

}  // namespace

CheckReport check_vertij(const BisectionSemigroup& bis,
                         const GroupoidAction& ga,
                         const PartialAction& attached, int sigma,
                         const IndexSet& n, const std::string& instance_id) {
  CheckReport rep("vertij", instance_id,
                  str("sigma=", ga.space().points[sigma],
                      " N=", ga.space().format_subset(n)));
  const int unit = ga.anchor(sigma);

  IndexSet fiber;  // arrows sourced at the anchor of sigma
  for (int x = 0; x < bis.gpd.size(); ++x)
    if (bis.gpd.d(x) == unit) fiber.push_back(x);

  IndexSet app = applicable(attached, sigma);
  auto eval = [&](int element) { return unique_arrow_at(bis, element, unit); };

  for (int a : app)
    for (int b : app)
      rep.require((eval(a) == eval(b)) == point_equiv(attached, sigma, a, b),
                  str("evaluation vs pointwise equivalence at (", a, ",", b, ")"));

  GermClassTable classes = germ_classes(attached, sigma);
  IndexSet eval_image;
  for (const IndexSet& cls : classes.classes) insert_sorted(eval_image, eval(cls[0]));
  rep.require(eval_image.size() == classes.classes.size(),
              "class evaluation map not injective");
  rep.require_set_equal("class-evaluation-bijection", eval_image, fiber);

  PointRecurrence pr = recurrence(attached, sigma, n);
  IndexSet mapped;
  for (int cls : pr.classes) insert_sorted(mapped, eval(pr.germs.classes[cls][0]));
  rep.require_set_equal("recurrence-transfer", mapped,
                        tilde_recurrence(ga, {sigma}, n));
  return rep;
}

IndexSet meeting_bisections(const BisectionSemigroup& bis, const IndexSet& e) {
  IndexSet out;
  for (int i = 0; i < static_cast<int>(bis.bisections.size()); ++i)
    if (!set_intersection(bis.bisections[i], e).empty()) out.push_back(i);
  return out;
}

CheckReport check_onegsion(const BisectionSemigroup& bis,
                           const GroupoidAction& ga,
                           const PartialAction& attached, int sigma,
                           const IndexSet& m, const IndexSet& n, uint64_t seed,
                           const std::string& instance_id) {
  CheckReport rep("onegsion", instance_id,
                  str("sigma=", ga.space().points[sigma],
                      " M=", ga.space().format_subset(m),
                      " N=", ga.space().format_subset(n)));

  rep.require_set_equal("recurrent-bisections",
                        naive_recurrence(attached, m, n),
                        meeting_bisections(bis, tilde_recurrence(ga, m, n)));

  const int unit = ga.anchor(sigma);
  IndexSet fiber;
  for (int x = 0; x < bis.gpd.size(); ++x)
    if (bis.gpd.d(x) == unit) fiber.push_back(x);
  IndexSet app = applicable(attached, sigma);

  auto run_one = [&](const IndexSet& e) {
    IndexSet meets = meeting_bisections(bis, e);
    rep.require(is_subset(meets, app),
                "bisections meeting the fiber are not all applicable");
    IndexSet preimage;
    for (int a : app)
      if (contains(e, unique_arrow_at(bis, a, unit))) preimage.push_back(a);
    rep.require(meets == preimage,
                "meeting set differs from the evaluation preimage");
  };

  const int kf = static_cast<int>(fiber.size());
  if (kf <= 12) {
    for (long long mask = 0; mask < (1LL << kf); ++mask) {
      IndexSet e;
      for (int i = 0; i < kf; ++i)
        if (mask & (1LL << i)) e.push_back(fiber[i]);
      run_one(e);
    }
  } else {
    rep.seed = seed;
    Rng rng(seed);
    for (int trial = 0; trial < 4096; ++trial) {
      IndexSet e;
      for (int i = 0; i < kf; ++i)
        if (rng() & 1) e.push_back(fiber[i]);
      run_one(e);
    }
  }
  return rep;
}

}  // namespace semidyn
