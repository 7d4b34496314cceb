#include "semidyn/generate.hpp"

namespace semidyn {

PartialAction generate_restricted_action(const PartialAction& global,
                                         uint64_t seed, int shrink_percent,
                                         int max_retries) {
  internal_check(global.genuine(), "restriction generator needs a genuine action");
  if (shrink_percent <= 0) return global;

  const auto& s = global.sg();
  const int m = global.space().size();
  Rng rng(seed);
  auto drop = [&] {
    return static_cast<int>(rng() % 100) < shrink_percent;
  };

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<PartialBijection> theta(s.size());
    for (int e : s.idempotents()) theta[e] = global.theta(e);
    for (int x = 0; x < s.size(); ++x) {
      if (s.is_idempotent(x) || s.inv(x) < x) continue;
      // keep the pair whole half of the time, shrink otherwise
      std::vector<int> img = global.theta(x).images();
      if (rng() % 2 == 1) {
        for (int p = 0; p < m; ++p)
          if (img[p] >= 0 && drop()) img[p] = -1;
      }
      PartialBijection cand = PartialBijection::from_images(std::move(img));
      if (s.inv(x) == x) {
        // self-inverse: cut down to a part the map carries onto itself
        IndexSet dom = set_intersection(cand.domain(), cand.image());
        std::vector<int> sym(m, -1);
        for (int p : dom)
          if (contains(dom, cand.apply(p))) sym[p] = cand.apply(p);
        cand = PartialBijection::from_images(std::move(sym));
        theta[x] = cand;
      } else {
        theta[x] = cand;
        theta[s.inv(x)] = cand.inverse();
      }
    }
    try {
      return validate_partial_action(s, global.space(), std::move(theta));
    } catch (const Error&) {
      // resample
    }
  }
  fail("GenerationExhausted",
       str("no valid restriction found in ", max_retries, " attempts"));
}

}  // namespace semidyn
