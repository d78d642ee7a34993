#include "linkkit/invariants.hpp"

#include <utility>
#include <vector>

namespace linkkit {

int linking_number(const LinkDiagram& d, int i, int j) {
  if (i < 1 || i > d.n_components || j < 1 || j > d.n_components)
    throw BadSelector("component index out of range");
  if (i == j) throw BadSelector("linking number needs two distinct components");
  long long s = 0;
  for (const auto& c : d.crossings) {
    int cu = d.comp_of(c.uin()), co = d.comp_of(c.oin());
    if ((cu == i && co == j) || (cu == j && co == i)) s += c.sign;
  }
  // crossings between two closed curves come in pairs
  return int(s / 2);
}

IntMatrix linking_matrix(const LinkDiagram& d) {
  IntMatrix m(d.n_components, d.n_components);
  for (int i = 1; i <= d.n_components; ++i)
    for (int j = i + 1; j <= d.n_components; ++j) {
      int v = linking_number(d, i, j);
      m.at(i - 1, j - 1) = v;
      m.at(j - 1, i - 1) = v;
    }
  return m;
}

namespace {

// union-find with a rollback trail; no path compression so undo is exact
struct UndoDsu {
  std::vector<int> parent, sz;
  std::vector<std::pair<int, int>> trail;  // (absorbed root, absorbing root)
  int comps;

  explicit UndoDsu(int n) : parent(size_t(n) + 1, 0), sz(size_t(n) + 1, 1), comps(n) {
    for (int i = 0; i <= n; ++i) parent[size_t(i)] = i;
  }
  int find(int x) const {
    while (parent[size_t(x)] != x) x = parent[size_t(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (sz[size_t(a)] < sz[size_t(b)]) std::swap(a, b);
    parent[size_t(b)] = a;
    sz[size_t(a)] += sz[size_t(b)];
    trail.emplace_back(b, a);
    --comps;
  }
  size_t mark() const { return trail.size(); }
  void rollback(size_t m) {
    while (trail.size() > m) {
      auto [b, a] = trail.back();
      trail.pop_back();
      parent[size_t(b)] = b;
      sz[size_t(a)] -= sz[size_t(b)];
      ++comps;
    }
  }
};

Laurent delta_pow(int k) {
  Laurent delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  Laurent r = Laurent::one();
  for (int i = 0; i < k; ++i) r = r * delta;
  return r;
}

}  // namespace

Laurent kauffman_bracket(const LinkDiagram& d) {
  int nc = int(d.crossings.size());
  if (nc > kBracketCrossingLimit)
    throw TooLarge("bracket state sum limited to 24 crossings");
  int free_loops = d.unknotted_free_components;
  if (nc == 0) {
    return free_loops == 0 ? Laurent::one() : delta_pow(free_loops - 1);
  }

  // count[s][L]: number of states with (#A - #B) = s - nc and L arc loops
  std::vector<std::vector<long long>> count(
      size_t(2 * nc) + 1, std::vector<long long>(size_t(d.arc_count) + 1, 0));
  UndoDsu dsu(d.arc_count);

  auto rec = [&](auto&& self, int i, int a_minus_b) -> void {
    if (i == nc) {
      ++count[size_t(a_minus_b + nc)][size_t(dsu.comps)];
      return;
    }
    const auto& q = d.crossings[size_t(i)].a;
    size_t m = dsu.mark();
    dsu.unite(q[0], q[1]);
    dsu.unite(q[2], q[3]);
    self(self, i + 1, a_minus_b + 1);
    dsu.rollback(m);
    dsu.unite(q[0], q[3]);
    dsu.unite(q[1], q[2]);
    self(self, i + 1, a_minus_b - 1);
    dsu.rollback(m);
  };
  rec(rec, 0, 0);

  Laurent out;
  std::vector<Laurent> dpow(size_t(d.arc_count) + free_loops + 1);
  for (int s = 0; s <= 2 * nc; ++s) {
    for (int L = 1; L <= d.arc_count; ++L) {
      long long c = count[size_t(s)][size_t(L)];
      if (c == 0) continue;
      int loops = L + free_loops;
      if (dpow[size_t(loops)].is_zero()) dpow[size_t(loops)] = delta_pow(loops - 1);
      Laurent term = dpow[size_t(loops)];
      term.shift(s - nc, BigInt(c));
      out += term;
    }
  }
  return out;
}

Laurent jones(const LinkDiagram& d) {
  Laurent f = kauffman_bracket(d);
  long long w = writhe(d);
  f.shift(-3 * w, (w & 1) ? BigInt(-1) : BigInt(1));
  return f;
}

}  // namespace linkkit
