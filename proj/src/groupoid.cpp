#include "semidyn/groupoid.hpp"

namespace semidyn {

int FiniteGroupoid::index_of_label(const std::string& l) const {
  for (int i = 0; i < k_; ++i)
    if (labels_[i] == l) return i;
  return -1;
}

FiniteGroupoid validate_groupoid(const IndexSet& units,
                                 const std::vector<int>& d,
                                 const std::vector<int>& r,
                                 const std::vector<std::vector<int>>& comp,
                                 std::vector<std::string> labels) {
  const int k = static_cast<int>(d.size());
  if (k == 0) fail("BadTable", "a groupoid needs at least one arrow");
  if (static_cast<int>(r.size()) != k || static_cast<int>(comp.size()) != k)
    fail("BadTable", "inconsistent table sizes");
  for (const auto& row : comp)
    if (static_cast<int>(row.size()) != k)
      fail("BadTable", "composition table is not square");

  FiniteGroupoid g;
  g.k_ = k;
  g.units_ = units;
  g.unit_flag_.assign(k, 0);
  for (int u : units) {
    if (u < 0 || u >= k) fail("BadTable", "unit index out of range");
    g.unit_flag_[u] = 1;
  }
  if (units.empty()) fail("BadTable", "a groupoid needs at least one unit");
  g.d_ = d;
  g.r_ = r;

  if (labels.empty())
    for (int i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
  if (static_cast<int>(labels.size()) != k)
    fail("BadTable", "label count does not match arrow count");
  g.labels_ = std::move(labels);

  for (int x = 0; x < k; ++x) {
    if (d[x] < 0 || d[x] >= k || !g.unit_flag_[d[x]])
      fail("BadUnit", "source of " + g.label(x) + " is not a unit");
    if (r[x] < 0 || r[x] >= k || !g.unit_flag_[r[x]])
      fail("BadUnit", "range of " + g.label(x) + " is not a unit");
  }
  for (int u : units)
    if (d[u] != u || r[u] != u)
      fail("BadUnit", "unit " + g.label(u) + " is not its own source and range");

  g.comp_.assign(static_cast<size_t>(k) * k, -1);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int v = comp[x][y];
      bool composable = d[x] == r[y];
      if (composable != (v >= 0))
        fail("BadTable",
             str("composition of ", g.label(x), " and ", g.label(y),
                 composable ? " missing" : " defined off the composable pairs"));
      if (v >= k) fail("BadTable", "composition entry out of range");
      g.comp_[static_cast<size_t>(x) * k + y] = v;
    }

  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int xy = g.compose(x, y);
      if (xy < 0) continue;
      if (g.d_[xy] != d[y] || g.r_[xy] != r[x])
        fail("BadUnit", str("source/range of ", g.label(x), "*", g.label(y),
                            " disagree with the factors"));
    }

  // unit laws
  for (int x = 0; x < k; ++x) {
    if (g.compose(x, d[x]) != x)
      fail("BadUnit", g.label(x) + " is changed by its source unit");
    if (g.compose(r[x], x) != x)
      fail("BadUnit", g.label(x) + " is changed by its range unit");
  }

  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (d[x] != r[y]) continue;
      for (int z = 0; z < k; ++z) {
        if (d[y] != r[z]) continue;
        if (g.compose(g.compose(x, y), z) != g.compose(x, g.compose(y, z)))
          fail("NotAssociative",
               str("(", g.label(x), g.label(y), ")", g.label(z), " != ",
                   g.label(x), "(", g.label(y), g.label(z), ")"));
      }
    }

  g.inv_.assign(k, -1);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (d[y] != r[x] || r[y] != d[x]) continue;
      if (g.compose(y, x) == d[x] && g.compose(x, y) == r[x]) {
        if (g.inv_[x] >= 0)
          fail("BadInverse", g.label(x) + " has two two-sided inverses");
        g.inv_[x] = y;
      }
    }
    if (g.inv_[x] < 0)
      fail("BadInverse", g.label(x) + " has no two-sided inverse");
  }
  return g;
}

IndexSet restriction(const FiniteGroupoid& g, const IndexSet& m,
                     const IndexSet& n) {
  IndexSet out;
  for (int x = 0; x < g.size(); ++x)
    if (contains(m, g.d(x)) && contains(n, g.r(x))) out.push_back(x);
  return out;
}

FiniteGroupoid pair_groupoid(int n) {
  if (n < 1) fail("BadTable", "pair groupoid needs at least one point");
  const int k = n * n;
  auto id = [&](int i, int j) { return i * n + j; };  // arrow j -> i
  IndexSet units;
  std::vector<int> d(k), r(k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d[id(i, j)] = id(j, j);
      r[id(i, j)] = id(i, i);
      labels[id(i, j)] =
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j) units.push_back(id(i, j));
    }
  std::vector<std::vector<int>> comp(k, std::vector<int>(k, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) comp[id(i, j)][id(j, l)] = id(i, l);
  return validate_groupoid(units, d, r, comp, labels);
}

FiniteGroupoid group_groupoid(const FiniteInverseSemigroup& g) {
  if (!is_group(g)) fail("BadTable", "group_groupoid needs a group");
  const int k = g.size();
  const int e = g.idempotents()[0];
  std::vector<int> d(k, e), r(k, e);
  std::vector<std::vector<int>> comp(k, std::vector<int>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) comp[x][y] = g.mul(x, y);
  return validate_groupoid({e}, d, r, comp, g.labels());
}

}  // namespace semidyn
