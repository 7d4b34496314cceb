#include "semidyn/expansion.hpp"

#include <algorithm>
#include <map>

#include "semidyn/recurrence.hpp"

namespace semidyn {

NormalForm normalize(const FiniteInverseSemigroup& a,
                     const std::vector<int>& word) {
  if (word.empty()) fail("BadWord", "cannot normalize the empty word");
  for (int x : word)
    if (x < 0 || x >= a.size()) fail("BadWord", "letter out of range");

  const long long budget =
      10LL * static_cast<long long>(word.size()) * a.size() * a.size() + 16;
  long long steps = 0;
  auto tick = [&] {
    if (++steps > budget)
      fail("NormalizationDiverged",
           str("rewriting exceeded ", budget, " steps"));
  };

  // state (E, z) stands for the product of partial identities indexed by E
  // followed by the generator of z
  IndexSet e;
  int z = word[0];
  for (size_t i = 1; i < word.size(); ++i) {
    // fuse the next letter: [z][b] = eps_{zb} eps_{zbb#} [zb]
    int b = word[i];
    int zb = a.mul(z, b);
    insert_sorted(e, zb);
    insert_sorted(e, a.mul(zb, a.inv(b)));
    z = zb;
    tick();
  }
  // re-anchor prefix entries whose support disagrees with the anchor's:
  // eps_x [z] = eps_{xx#z} eps_{xx#zz#x} [xx#z]
  for (;;) {
    const int zz = a.mul(z, a.inv(z));
    int bad = -1;
    for (int x : e)
      if (a.mul(x, a.inv(x)) != zz) {
        bad = x;
        break;
      }
    if (bad < 0) break;
    tick();
    const int xx = a.mul(bad, a.inv(bad));
    e.erase(std::find(e.begin(), e.end(), bad));
    insert_sorted(e, a.mul(xx, z));
    insert_sorted(e, a.mul(a.mul(xx, zz), bad));
    z = a.mul(xx, z);
  }
  insert_sorted(e, z);
  insert_sorted(e, a.mul(z, a.inv(z)));

  const int zz = a.mul(z, a.inv(z));
  for (int c : e)
    internal_check(a.mul(c, a.inv(c)) == zz,
                   "normal form support condition failed after rewriting");
  return NormalForm{e, z};
}

namespace {

// canonical generator word spelling a normal form: a 2-letter block per
// prefix entry, then the anchor
std::vector<int> spell(const FiniteInverseSemigroup& a, const NormalForm& nf) {
  std::vector<int> w;
  for (int c : nf.prefix) {
    w.push_back(c);
    w.push_back(a.inv(c));
  }
  w.push_back(nf.anchor);
  return w;
}

std::vector<int> concat(std::vector<int> u, const std::vector<int>& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

// shortest generator word per element, found by breadth-first enumeration;
// bounded because the canonical spelling of each normal form is itself a word
std::vector<std::vector<int>> shortest_spellings(const ExpansionSemigroup& ex) {
  const auto& a = ex.base;
  std::vector<std::vector<int>> out(ex.elements.size());
  size_t found = 0;
  std::vector<int> w;
  for (int len = 1; found < out.size(); ++len) {
    w.assign(len, 0);
    long long count = 1;
    for (int i = 0; i < len; ++i) count *= a.size();
    for (long long v = 0; v < count && found < out.size(); ++v) {
      int idx = ex.index_of(normalize(a, w));
      internal_check(idx >= 0, "word normalized to an unlisted normal form");
      if (out[idx].empty()) {
        out[idx] = w;
        ++found;
      }
      for (int p = 0; p < len; ++p) {
        if (++w[p] < a.size()) break;
        w[p] = 0;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> oracle_induced_table(const ExpansionSemigroup& ex) {
  const auto& a = ex.base;
  const int n = static_cast<int>(ex.elements.size());
  std::vector<std::vector<int>> minword = shortest_spellings(ex);
  int need = 4, longest = 1, second = 1;
  for (const NormalForm& nf : ex.elements)
    need = std::max(need, static_cast<int>(spell(a, nf).size()));
  for (const auto& w : minword) {
    int len = static_cast<int>(w.size());
    if (len >= longest) {
      second = longest;
      longest = len;
    } else {
      second = std::max(second, len);
    }
  }
  need = std::max(need, longest + second);

  OracleCongruence oc(a, need);
  std::map<long long, int> elem_of_class;
  for (int i = 0; i < n; ++i) {
    long long cls = oc.class_of(spell(a, ex.elements[i]));
    internal_check(elem_of_class.emplace(cls, i).second,
                   "two normal forms share one oracle class");
    // the shortest representative must sit in the same class as the
    // canonical spelling, making it oracle-certified
    internal_check(oc.class_of(minword[i]) == cls,
                   "shortest representative escapes its oracle class");
  }
  internal_check(oc.class_count() == n,
                 str("oracle found ", oc.class_count(), " classes for ", n,
                     " normal forms"));

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long cls = oc.class_of(concat(minword[i], minword[j]));
      auto it = elem_of_class.find(cls);
      internal_check(it != elem_of_class.end(),
                     "oracle product class holds no normal form");
      table[i][j] = it->second;
    }
  return table;
}

namespace {

void oracle_gate(const ExpansionSemigroup& ex) {
  std::vector<std::vector<int>> induced = oracle_induced_table(ex);
  for (int i = 0; i < ex.sg.size(); ++i)
    for (int j = 0; j < ex.sg.size(); ++j)
      internal_check(induced[i][j] == ex.sg.mul(i, j),
                     str("rewriting and oracle disagree on product ", i, "*", j));
}

}  // namespace

int ExpansionSemigroup::index_of(const NormalForm& nf) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), nf);
  if (it == elements.end() || !(*it == nf)) return -1;
  return static_cast<int>(it - elements.begin());
}

ExpansionSemigroup expansion(const FiniteInverseSemigroup& a, int cap) {
  if (a.size() > cap)
    fail("CapExceeded",
         str("expansion of a ", a.size(), "-element semigroup exceeds cap ", cap));

  ExpansionSemigroup ex;
  ex.base = a;

  for (int anchor = 0; anchor < a.size(); ++anchor) {
    const int aa = a.mul(anchor, a.inv(anchor));
    IndexSet must{anchor};
    insert_sorted(must, aa);
    IndexSet optional;
    for (int c = 0; c < a.size(); ++c)
      if (a.mul(c, a.inv(c)) == aa && !contains(must, c)) optional.push_back(c);
    const int k = static_cast<int>(optional.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      NormalForm nf{must, anchor};
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) insert_sorted(nf.prefix, optional[b]);
      ex.elements.push_back(nf);
    }
  }
  std::sort(ex.elements.begin(), ex.elements.end());

  std::map<NormalForm, int> index;
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(ex.elements.size()); ++i) {
    index[ex.elements[i]] = i;
    const NormalForm& nf = ex.elements[i];
    labels.push_back(
        "{" + join(nf.prefix, ",", [&](int c) { return a.label(c); }) + "}[" +
        a.label(nf.anchor) + "]");
  }

  const int n = static_cast<int>(ex.elements.size());
  std::vector<std::vector<int>> words;
  for (const NormalForm& nf : ex.elements) words.push_back(spell(a, nf));

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NormalForm prod = normalize(a, concat(words[i], words[j]));
      auto it = index.find(prod);
      internal_check(it != index.end(),
                     "product normalized to an unlisted normal form");
      table[i][j] = it->second;
    }
  ex.sg = validate_inverse_semigroup(table, labels,
                                     std::max(n, kDefaultSemigroupCap));

  ex.iota_of.resize(a.size());
  for (int x = 0; x < a.size(); ++x) {
    int i = ex.index_of(normalize(a, {x}));
    internal_check(i >= 0, "generator image missing from the element list");
    ex.iota_of[x] = i;
    internal_check(ex.q(i) == x, "anchor projection does not undo the embedding");
  }

  // embedding respects inversion and the three defining relations
  for (int x = 0; x < a.size(); ++x)
    internal_check(ex.sg.inv(ex.iota_of[x]) == ex.iota_of[a.inv(x)],
                   "embedding does not intertwine inversion");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      int ix = ex.iota_of[x], iy = ex.iota_of[y];
      int ixs = ex.iota_of[a.inv(x)], iys = ex.iota_of[a.inv(y)];
      internal_check(ex.sg.mul(ex.sg.mul(ixs, ix), iy) ==
                         ex.sg.mul(ixs, ex.iota_of[a.mul(x, y)]),
                     "left relation fails under the embedding");
      internal_check(ex.sg.mul(ex.sg.mul(ix, iy), iys) ==
                         ex.sg.mul(ex.iota_of[a.mul(x, y)], iys),
                     "right relation fails under the embedding");
      internal_check(ex.sg.mul(ex.sg.mul(ix, ixs), ix) == ix,
                     "regularity relation fails under the embedding");
    }

  // normalizing the word of a normal form is a no-op
  for (int i = 0; i < n; ++i)
    internal_check(normalize(a, words[i]) == ex.elements[i],
                   "normalize is not idempotent");

  internal_check(is_e_unitary(ex.sg) == is_e_unitary(a),
                 "E-unitarity not preserved/reflected by the expansion");

  if (a.size() <= 4) oracle_gate(ex);
  return ex;
}

OracleCongruence::OracleCongruence(const FiniteInverseSemigroup& a, int max_len)
    : n_(a.size()), max_len_(max_len) {
  if (max_len_ < 1) fail("BadWord", "max_len must be positive");

  offset_.assign(max_len_ + 2, 0);
  long long total = 0, pw = 1;
  for (int len = 1; len <= max_len_; ++len) {
    pw *= n_;
    offset_[len] = total;
    total += pw;
    if (total > 24'000'000LL)
      fail("CapExceeded", str("word universe too large at length ", len));
  }
  offset_[max_len_ + 1] = total;

  std::vector<long long> npow(max_len_ + 2, 1);
  for (int i = 1; i <= max_len_ + 1; ++i) npow[i] = npow[i - 1] * n_;

  uf_ = UnionFind(static_cast<int>(total));

  // seed every in-context instance of the three relations; all rules shorten,
  // so targets stay inside the universe
  std::vector<int> w;
  for (int len = 3; len <= max_len_; ++len) {
    w.assign(len, 0);
    for (long long value = 0; value < npow[len]; ++value) {
      long long code = offset_[len] + value;
      for (int p = 0; p + 2 < len; ++p) {
        const int x = w[p], y = w[p + 1], z = w[p + 2];
        const long long pre = value % npow[p];
        const long long suf = value / npow[p + 3];
        if (x == a.inv(y)) {
          long long v2 = pre + (x + static_cast<long long>(a.mul(y, z)) * n_) * npow[p] +
                         suf * npow[p + 2];
          uf_.unite(static_cast<int>(code), static_cast<int>(offset_[len - 1] + v2));
        }
        if (z == a.inv(y)) {
          long long v2 = pre + (a.mul(x, y) + static_cast<long long>(z) * n_) * npow[p] +
                         suf * npow[p + 2];
          uf_.unite(static_cast<int>(code), static_cast<int>(offset_[len - 1] + v2));
        }
        if (y == a.inv(x) && z == x) {
          long long v2 = pre + static_cast<long long>(x) * npow[p] + suf * npow[p + 1];
          uf_.unite(static_cast<int>(code), static_cast<int>(offset_[len - 2] + v2));
        }
      }
      // odometer on the digit array mirrors value+1
      for (int p = 0; p < len; ++p) {
        if (++w[p] < n_) break;
        w[p] = 0;
      }
    }
  }

  // close under one-letter extensions until nothing merges
  std::vector<int> seen(static_cast<size_t>(total));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int side = 0; side < 2; ++side) {
      for (int letter = 0; letter < n_; ++letter) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int len = 1; len < max_len_; ++len) {
          for (long long value = 0; value < npow[len]; ++value) {
            const int root = uf_.find(static_cast<int>(offset_[len] + value));
            const long long ext =
                side == 0 ? offset_[len + 1] + letter + value * n_
                          : offset_[len + 1] + value + letter * npow[len];
            if (seen[root] < 0)
              seen[root] = static_cast<int>(ext);
            else if (uf_.unite(static_cast<int>(ext), seen[root]))
              changed = true;
          }
        }
      }
    }
  }

  class_count_ = 0;
  for (long long c = 0; c < total; ++c)
    if (uf_.find(static_cast<int>(c)) == c) ++class_count_;
}

long long OracleCongruence::code_of(const std::vector<int>& word) const {
  const int len = static_cast<int>(word.size());
  internal_check(len >= 1 && len <= max_len_, "word outside the oracle universe");
  long long value = 0, pw = 1;
  for (int i = 0; i < len; ++i) {
    value += word[i] * pw;
    pw *= n_;
  }
  return offset_[len] + value;
}

long long OracleCongruence::class_of(const std::vector<int>& word) const {
  return uf_.find(static_cast<int>(code_of(word)));
}

int oracle_stable_count(const FiniteInverseSemigroup& a, int start_len,
                        int max_len_cap) {
  int prev = OracleCongruence(a, start_len).class_count();
  for (int len = start_len + 1; len <= max_len_cap; ++len) {
    int cur = OracleCongruence(a, len).class_count();
    if (cur == prev) return cur;
    prev = cur;
  }
  fail("CapExceeded", "oracle class count did not stabilize under the length cap");
}

PartialAction expansion_action(const ExpansionSemigroup& sa,
                               const PartialAction& base_action) {
  internal_check(base_action.sg() == sa.base,
                 "action does not act for the expansion's base semigroup");
  const auto& a = sa.base;
  const int m = base_action.space().size();

  std::vector<PartialBijection> theta;
  for (const NormalForm& nf : sa.elements) {
    IndexSet window = full_set(m);
    for (int c : nf.prefix)
      window = set_intersection(window, base_action.theta(c).image());
    std::vector<int> img(m, -1);
    for (int p : base_action.theta(nf.anchor).domain()) {
      int q = base_action.theta(nf.anchor).apply(p);
      if (contains(window, q)) img[p] = q;
    }
    theta.push_back(PartialBijection::from_images(std::move(img)));
  }

  PartialAction act =
      validate_partial_action(sa.sg, base_action.space(), std::move(theta));
  internal_check(act.genuine(), "expansion action must be genuine");

  // partial identities attached to generators have the base images
  for (int c = 0; c < a.size(); ++c) {
    int eps = sa.sg.mul(sa.iota_of[c], sa.iota_of[a.inv(c)]);
    internal_check(act.theta(eps).image() == base_action.theta(c).image(),
                   "partial identity image mismatch at " + a.label(c));
  }
  // factorization through the partial identities
  for (int i = 0; i < static_cast<int>(sa.elements.size()); ++i) {
    PartialBijection comp = base_action.theta(sa.elements[i].anchor);
    for (int c : sa.elements[i].prefix)
      comp = PartialBijection::compose(
          PartialBijection::identity_on(m, base_action.theta(c).image()), comp);
    internal_check(comp == act.theta(i),
                   "expansion action does not factor through partial identities");
  }
  // composing with the embedding recovers the base action
  for (int x = 0; x < a.size(); ++x)
    internal_check(act.theta(sa.iota_of[x]) == base_action.theta(x),
                   "embedding does not recover the base action at " + a.label(x));
  return act;
}

CheckReport check_fusirat(const ExpansionSemigroup& sa,
                          const PartialAction& base,
                          const PartialAction& expanded, const IndexSet& m,
                          const IndexSet& n, const std::string& instance_id) {
  CheckReport rep("fusirat", instance_id,
                  str("M=", base.space().format_subset(m),
                      " N=", base.space().format_subset(n)));
  IndexSet base_rec = naive_recurrence(base, m, n);
  IndexSet exp_rec = naive_recurrence(expanded, m, n);

  IndexSet lhs1;
  for (int x : base_rec) insert_sorted(lhs1, sa.iota_of[x]);
  IndexSet iota_image;
  for (int x = 0; x < sa.base.size(); ++x) insert_sorted(iota_image, sa.iota_of[x]);
  rep.require_set_equal("embedded-trace", lhs1,
                        set_intersection(exp_rec, iota_image));

  IndexSet q_image;
  for (int s : exp_rec) insert_sorted(q_image, sa.q(s));
  rep.require_set_equal("anchor-projection", q_image, base_rec);
  return rep;
}

CheckReport check_potrivire(const ExpansionSemigroup& sa,
                            const PartialAction& base,
                            const PartialAction& expanded, int sigma,
                            const IndexSet& n, const std::string& instance_id) {
  CheckReport rep("potrivire", instance_id,
                  str("sigma=", base.space().points[sigma],
                      " N=", base.space().format_subset(n)));

  IndexSet app_exp = applicable(expanded, sigma);
  IndexSet app_base = applicable(base, sigma);
  IndexSet q_app;
  for (int s : app_exp) insert_sorted(q_app, sa.q(s));
  rep.require_set_equal("applicable-projection", q_app, app_base);

  // equal anchors force pointwise equivalence; in general the equivalence
  // corresponds to pointwise equivalence of the anchors in the base (the
  // anchor projection is monotone, not constant, along the natural order, so
  // for non-group bases distinct anchors can share a class)
  for (int s : app_exp)
    for (int t : app_exp) {
      if (sa.q(s) == sa.q(t))
        rep.require(point_equiv(expanded, sigma, s, t),
                    str("equal anchors split: s=", sa.sg.label(s),
                        " t=", sa.sg.label(t)));
      rep.require(point_equiv(expanded, sigma, s, t) ==
                      point_equiv(base, sigma, sa.q(s), sa.q(t)),
                  str("s=", sa.sg.label(s), " t=", sa.sg.label(t)));
    }

  // the anchor projection bijects the pointwise recurrence classes of the
  // expansion onto those of the base
  PointRecurrence pr = recurrence(expanded, sigma, n);
  PointRecurrence pr_base = recurrence(base, sigma, n);
  IndexSet image;
  for (int cls : pr.classes) {
    int first = -1;
    for (int member : pr.germs.classes[cls]) {
      int mapped = pr_base.germs.class_of(sa.q(member));
      rep.require(mapped >= 0, "anchor of a recurrent element not applicable");
      if (first < 0) first = mapped;
      rep.require(mapped == first, "class map not constant on a class");
    }
    insert_sorted(image, first);
  }
  rep.require(image.size() == pr.classes.size(),
              "class map not injective on recurrence classes");
  rep.require_set_equal("class-bijection", image, pr_base.classes);
  rep.record_sizes("cardinality", static_cast<long long>(pr.classes.size()),
                   static_cast<long long>(pr_base.classes.size()));
  rep.require(pr.classes.size() == pr_base.classes.size(),
              "cardinalities differ");
  return rep;
}

}  // namespace semidyn
