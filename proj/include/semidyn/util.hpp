#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace semidyn {

/// Sorted vector of distinct indices. All set-valued results in the library
/// use this representation so that output order is deterministic.
using IndexSet = std::vector<int>;

inline bool contains(const IndexSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline void insert_sorted(IndexSet& s, int x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet full_set(int n) {
  IndexSet out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

inline void canonicalize(IndexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // true when the two were in distinct classes
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent[b] = a;
    return true;
  }

  std::vector<int> parent;
};

/// Classes of a union-find, ordered by minimal member; class_of is dense.
struct Partition {
  std::vector<int> class_of;
  std::vector<IndexSet> classes;
};

inline Partition partition_from(UnionFind& uf) {
  int n = static_cast<int>(uf.parent.size());
  Partition p;
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int root = uf.find(x);
    if (p.class_of[root] < 0) {
      p.class_of[root] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[x] = p.class_of[root];
    p.classes[p.class_of[x]].push_back(x);
  }
  return p;
}

/// Deterministic RNG used everywhere sampling is allowed; the seed is always
/// explicit and recorded in reports.
using Rng = std::mt19937_64;

inline IndexSet random_subset(Rng& rng, int universe, int size) {
  IndexSet pool = full_set(universe);
  IndexSet out;
  for (int i = 0; i < size && !pool.empty(); ++i) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    size_t j = pick(rng);
    out.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<long>(j));
  }
  canonicalize(out);
  return out;
}

template <typename... Ts>
std::string str(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

template <typename Range, typename Fmt>
std::string join(const Range& r, const std::string& sep, Fmt fmt) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : r) {
    if (!first) os << sep;
    first = false;
    os << fmt(x);
  }
  return os.str();
}

}  // namespace semidyn
