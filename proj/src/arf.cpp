#include "linkkit/arf.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "linkkit/invariants.hpp"
#include "linkkit/seifert.hpp"

namespace linkkit {
namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("arf: ") + what);
}

using Vec = std::vector<unsigned char>;  // GF(2) coordinates

int pair2(const std::vector<Vec>& B, const Vec& x, const Vec& y) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < y.size(); ++j) s ^= B[i][j] & y[j];
  }
  return s;
}

void add_into(Vec& v, const Vec& w) {
  for (size_t i = 0; i < v.size(); ++i) v[i] ^= w[i];
}

// Band fusion of the components through arcs a and b: cut both arcs and
// rejoin tail-of-a to head-of-b and tail-of-b to head-of-a (the oriented
// smoothing through the face both border). In the tables that is one swap of
// the two head slots; crossings and their signs are untouched.
LinkDiagram splice(const LinkDiagram& d, int a, int b) {
  std::vector<Crossing> cs = d.crossings;
  auto head_slot = [&](int arc) -> std::pair<int, int> {
    for (size_t c = 0; c < cs.size(); ++c) {
      if (cs[c].a[0] == arc) return {int(c), 0};
      if (cs[c].a[cs[c].slot_oin()] == arc) return {int(c), cs[c].slot_oin()};
    }
    ensure(false, "arc head not found");
    return {-1, -1};
  };
  auto [ca, sa] = head_slot(a);
  auto [cb, sb] = head_slot(b);
  cs[ca].a[sa] = b;
  cs[cb].a[sb] = a;

  // relabel arcs in traversal order so the quadruples can be re-read
  const int na = d.arc_count;
  std::vector<int> succ(na + 1, 0);
  for (const Crossing& c : cs) {
    succ[c.uin()] = c.uout();
    succ[c.oin()] = c.oout();
  }
  std::vector<int> newlab(na + 1, 0);
  int next = 1;
  for (int start = 1; start <= na; ++start) {
    if (newlab[start]) continue;
    for (int e = start; !newlab[e]; e = succ[e]) newlab[e] = next++;
  }
  ensure(next == na + 1, "relabelling missed an arc");
  std::vector<std::array<int, 4>> quads;
  quads.reserve(cs.size());
  for (const Crossing& c : cs)
    quads.push_back({newlab[c.a[0]], newlab[c.a[1]], newlab[c.a[2]], newlab[c.a[3]]});
  LinkDiagram out = make_diagram(quads, d.n_components - 1, d.unknotted_free_components);
  for (size_t i = 0; i < cs.size(); ++i)
    ensure(out.crossings[i].sign == cs[i].sign, "splice flipped a crossing sign");
  return out;
}

}  // namespace

int arf_knot(const LinkDiagram& d) {
  if (d.n_components != 1) throw NotAKnot("arf_knot needs a 1-component diagram");
  IntMatrix V = seifert_matrix(d);
  const int n = V.n;
  std::vector<Vec> V2(n, Vec(n, 0)), B(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      V2[i][j] = (unsigned char)(((V.at(i, j) % 2) + 2) % 2 != 0 ? 1 : 0);
      B[i][j] = V2[i][j] ^ V2[j][i];
    }
  auto quad = [&](const Vec& x) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < n; ++j) s ^= V2[i][j] & x[j];
    }
    return s;
  };

  // split off hyperbolic pairs until the basis is exhausted
  std::vector<Vec> w(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  int arf = 0;
  while (!w.empty()) {
    Vec a = std::move(w.front());
    w.erase(w.begin());
    int bi = -1;
    for (size_t j = 0; j < w.size(); ++j)
      if (pair2(B, a, w[j])) {
        bi = int(j);
        break;
      }
    ensure(bi >= 0, "mod-2 intersection form is degenerate");
    Vec b = std::move(w[bi]);
    w.erase(w.begin() + bi);
    arf ^= quad(a) & quad(b);
    for (Vec& v : w) {
      if (pair2(B, v, b)) add_into(v, a);
      if (pair2(B, v, a)) add_into(v, b);
    }
  }
  return arf;
}

LinkDiagram fuse_to_knot(const LinkDiagram& d, int band_choice) {
  LinkDiagram cur = renumbered(d);
  if (cur.unknotted_free_components > 0) {
    // a split unknot band-sums in as a connected summand with trivial surface
    cur.n_components -= cur.unknotted_free_components;
    cur.unknotted_free_components = 0;
    if (cur.n_components == 0) cur.n_components = 1;
  }
  while (cur.n_components > 1) {
    FaceData fd = trace_faces(cur);
    auto sided = [&](int arc, int f) {
      return fd.left_face[arc] == f || fd.right_face[arc] == f;
    };
    auto opposed = [&](int a, int b, int f) {
      return sided(a, f) && sided(b, f) &&
             (fd.left_face[a] == f) != (fd.left_face[b] == f);
    };
    std::vector<std::pair<int, int>> cands;
    for (int pass = 0; pass < 2 && cands.empty(); ++pass)
      for (int a = 1; a <= cur.arc_count; ++a) {
        if (cur.comp_of(a) != 1) continue;
        for (int b = 1; b <= cur.arc_count; ++b) {
          if (cur.comp_of(b) != 2) continue;
          if (pass == 0 ? opposed(a, b, fd.infinity_face)
                        : opposed(a, b, fd.left_face[a]) ||
                              opposed(a, b, fd.right_face[a]))
            cands.push_back({a, b});
        }
      }
    if (cands.empty())
      throw BadParams("components 1 and 2 share no face to band through");
    int pick = band_choice % int(cands.size());
    band_choice /= int(cands.size());
    cur = renumbered(splice(cur, cands[pick].first, cands[pick].second));
  }
  return cur;
}

int arf_link(const LinkDiagram& d, int band_choice) {
  IntMatrix lk = linking_matrix(d);
  for (int i = 0; i < lk.n; ++i) {
    BigInt s = 0;
    for (int j = 0; j < lk.m; ++j) s += lk.at(i, j);
    if (s % 2 != 0)
      throw NotProper("component " + std::to_string(i + 1) +
                      " has odd total linking " + s.str());
  }
  return arf_knot(fuse_to_knot(d, band_choice));
}

}  // namespace linkkit
