#include "semidyn/builtins.hpp"

#include <map>

namespace semidyn {

namespace {

// all injective partial maps on m points, ordered lexicographically by image
// row with "undefined" first
std::vector<PartialBijection> all_partial_bijections(int m) {
  std::vector<PartialBijection> out;
  std::vector<int> img(m, -1);
  std::vector<char> used(m, 0);
  auto rec = [&](auto&& self, int p) -> void {
    if (p == m) {
      out.push_back(PartialBijection::from_images(img));
      return;
    }
    img[p] = -1;
    self(self, p + 1);
    for (int q = 0; q < m; ++q) {
      if (used[q]) continue;
      img[p] = q;
      used[q] = 1;
      self(self, p + 1);
      used[q] = 0;
    }
    img[p] = -1;
  };
  rec(rec, 0);
  return out;
}

std::string pb_label(const PartialBijection& b) {
  std::string l;
  for (int p = 0; p < b.space_size(); ++p)
    l += b.defined_at(p) ? std::to_string(b.apply(p) + 1) : std::string("-");
  return l;
}

}  // namespace

SymmetricInverseMonoid symmetric_inverse(int npoints, int cap) {
  if (npoints < 1) fail("BadTable", "need at least one point");
  if (npoints > cap)
    fail("CapExceeded", str("symmetric_inverse(", npoints, ") exceeds cap ", cap));

  SymmetricInverseMonoid out;
  out.maps = all_partial_bijections(npoints);
  const int n = static_cast<int>(out.maps.size());

  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    index[out.maps[i].images()] = i;
    labels.push_back(pb_label(out.maps[i]));
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] =
          index.at(PartialBijection::compose(out.maps[i], out.maps[j]).images());

  out.sg = validate_inverse_semigroup(table, labels, std::max(n, kDefaultSemigroupCap));
  std::vector<std::string> pts;
  for (int p = 0; p < npoints; ++p) pts.push_back(std::to_string(p + 1));
  out.points = make_space(pts);
  return out;
}

FiniteInverseSemigroup cyclic_group(int n) {
  if (n < 1) fail("BadTable", "cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::string> labels{"e"};
  for (int i = 1; i < n; ++i)
    labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  return validate_inverse_semigroup(table, labels);
}

FiniteInverseSemigroup semilattice_chain(int n) {
  if (n < 1) fail("BadTable", "chain length must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = std::min(i, j);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  return validate_inverse_semigroup(table, labels);
}

FiniteInverseSemigroup direct_product(const FiniteInverseSemigroup& s,
                                      const FiniteInverseSemigroup& t) {
  const int ns = s.size(), nt = t.size(), n = ns * nt;
  auto id = [&](int a, int b) { return a * nt + b; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b) {
      labels[id(a, b)] = "(" + s.label(a) + "," + t.label(b) + ")";
      for (int c = 0; c < ns; ++c)
        for (int d = 0; d < nt; ++d)
          table[id(a, b)][id(c, d)] = id(s.mul(a, c), t.mul(b, d));
    }
  return validate_inverse_semigroup(table, labels, std::max(n, kDefaultSemigroupCap));
}

FiniteInverseSemigroup builtin(const std::string& family, int n) {
  if (family == "symmetric_inverse") return symmetric_inverse(n).sg;
  if (family == "cyclic_group") return cyclic_group(n);
  if (family == "semilattice_chain") return semilattice_chain(n);
  fail("UnknownFamily", "no builtin family '" + family + "'");
}

PartialAction wagner_preston_action(const FiniteInverseSemigroup& s) {
  const int n = s.size();
  std::vector<std::string> pts;
  for (int x = 0; x < n; ++x) pts.push_back(s.label(x));
  FiniteSpace space = make_space(pts);

  std::vector<PartialBijection> theta;
  for (int a = 0; a < n; ++a) {
    std::vector<int> img(n, -1);
    int aa = s.mul(s.inv(a), a);
    for (int x = 0; x < n; ++x)
      if (s.mul(aa, x) == x) img[x] = s.mul(a, x);
    theta.push_back(PartialBijection::from_images(std::move(img)));
  }
  PartialAction act = validate_partial_action(s, std::move(space), std::move(theta));
  internal_check(act.genuine(), "left regular representation must be genuine");
  return act;
}

}  // namespace semidyn
