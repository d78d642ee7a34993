#include "linkkit/moves.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace linkkit {

namespace {

struct ArcEnds {
  std::vector<int> head;  // crossing consuming the arc
  std::vector<int> tail;  // crossing emitting the arc
};

ArcEnds arc_ends(const LinkDiagram& d) {
  ArcEnds e;
  e.head.assign(size_t(d.arc_count) + 1, -1);
  e.tail.assign(size_t(d.arc_count) + 1, -1);
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    e.head[size_t(c.uin())] = int(i);
    e.head[size_t(c.oin())] = int(i);
    e.tail[size_t(c.uout())] = int(i);
    e.tail[size_t(c.oout())] = int(i);
  }
  return e;
}

void drop_crossings(VisitLists& v, const std::set<int>& gone) {
  std::vector<int> remap(v.sign.size(), -1);
  std::vector<int> nsign;
  for (int i = 0; i < int(v.sign.size()); ++i)
    if (!gone.count(i)) {
      remap[size_t(i)] = int(nsign.size());
      nsign.push_back(v.sign[size_t(i)]);
    }
  for (auto& lst : v.comps) {
    std::vector<Visit> kept;
    for (const Visit& vis : lst)
      if (!gone.count(vis.crossing)) kept.push_back({remap[size_t(vis.crossing)], vis.under});
    lst = std::move(kept);
  }
  v.sign = std::move(nsign);
}

// consuming-visit position of every arc: (component index, offset)
std::vector<std::pair<int, int>> arc_positions(const LinkDiagram& d) {
  std::vector<std::pair<int, int>> pos(size_t(d.arc_count) + 1, {-1, -1});
  auto cycles = component_cycles(d);
  for (int c = 0; c < int(cycles.size()); ++c)
    for (int t = 0; t < int(cycles[size_t(c)].size()); ++t)
      pos[size_t(cycles[size_t(c)][size_t(t)])] = {c, t};
  return pos;
}

}  // namespace

VisitLists to_visits(const LinkDiagram& d) {
  VisitLists v;
  v.free_circles = d.unknotted_free_components;
  v.sign.reserve(d.crossings.size());
  for (const auto& c : d.crossings) v.sign.push_back(c.sign);
  std::vector<int> head(size_t(d.arc_count) + 1, -1);
  std::vector<char> under(size_t(d.arc_count) + 1, 0);
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    head[size_t(d.crossings[i].uin())] = int(i);
    under[size_t(d.crossings[i].uin())] = 1;
    head[size_t(d.crossings[i].oin())] = int(i);
  }
  for (const auto& cyc : component_cycles(d)) {
    std::vector<Visit> lst;
    lst.reserve(cyc.size());
    for (int e : cyc) lst.push_back({head[size_t(e)], under[size_t(e)] == 1});
    v.comps.push_back(std::move(lst));
  }
  return v;
}

LinkDiagram from_visits(const VisitLists& v) {
  int nc = int(v.sign.size());
  // uin, uout, oin, oout per crossing
  std::vector<std::array<int, 4>> roles(size_t(nc), {-1, -1, -1, -1});
  int base = 0, free_c = v.free_circles;
  for (const auto& lst : v.comps) {
    int m = int(lst.size());
    if (m == 0) {
      ++free_c;
      continue;
    }
    for (int t = 0; t < m; ++t) {
      int in_arc = base + t + 1;
      int out_arc = base + (t + 1) % m + 1;
      const Visit& vis = lst[size_t(t)];
      if (vis.crossing < 0 || vis.crossing >= nc)
        throw BadParams("visit references missing crossing");
      auto& r = roles[size_t(vis.crossing)];
      int off = vis.under ? 0 : 2;
      if (r[size_t(off)] != -1)
        throw BadParams("crossing passed twice on the same level");
      r[size_t(off)] = in_arc;
      r[size_t(off) + 1] = out_arc;
    }
    base += m;
  }
  std::vector<std::array<int, 4>> quads(size_t(nc), {0, 0, 0, 0});
  for (int x = 0; x < nc; ++x) {
    const auto& r = roles[size_t(x)];
    if (r[0] < 0 || r[2] < 0) throw BadParams("crossing not visited on both levels");
    if (v.sign[size_t(x)] > 0)
      quads[size_t(x)] = {r[0], r[3], r[1], r[2]};
    else
      quads[size_t(x)] = {r[0], r[2], r[1], r[3]};
  }
  LinkDiagram d = make_diagram(quads, -1, free_c);
  for (int x = 0; x < nc; ++x)
    if (d.crossings[size_t(x)].sign != v.sign[size_t(x)])
      throw BadParams("stored sign contradicts the rebuilt orientation");
  return d;
}

std::optional<LinkDiagram> r1_remove(const LinkDiagram& d, std::string* desc) {
  int pick = -1;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    if (c.oout() == c.uin() || c.uout() == c.oin()) {
      pick = int(i);
      break;
    }
  }
  if (pick < 0) return std::nullopt;
  VisitLists v = to_visits(d);
  drop_crossings(v, {pick});
  if (desc) *desc = "R1 at crossing " + std::to_string(pick + 1);
  return from_visits(v);
}

std::optional<LinkDiagram> r2_remove(const LinkDiagram& d, std::string* desc) {
  if (d.crossings.size() < 2) return std::nullopt;
  FaceData f = trace_faces(d);
  ArcEnds ends = arc_ends(d);
  for (int fid = 0; fid < f.n_faces; ++fid) {
    const auto& arcs = f.face_arcs[size_t(fid)];
    if (arcs.size() != 2 || arcs[0] == arcs[1]) continue;
    for (int flip = 0; flip < 2; ++flip) {
      int e = arcs[size_t(flip)], g = arcs[size_t(1 - flip)];  // e over, g under
      int x = ends.tail[size_t(e)], y = ends.head[size_t(e)];
      if (x == y) continue;
      if (d.crossings[size_t(x)].oout() != e || d.crossings[size_t(y)].oin() != e) continue;
      bool g_under = (d.crossings[size_t(ends.tail[size_t(g)])].uout() == g) &&
                     (d.crossings[size_t(ends.head[size_t(g)])].uin() == g);
      if (!g_under) continue;
      std::set<int> gc{ends.tail[size_t(g)], ends.head[size_t(g)]};
      if (gc != std::set<int>{x, y}) continue;
      if (d.crossings[size_t(x)].sign == d.crossings[size_t(y)].sign) continue;
      VisitLists v = to_visits(d);
      drop_crossings(v, {x, y});
      if (desc)
        *desc = "R2 at crossings " + std::to_string(std::min(x, y) + 1) + "," +
                std::to_string(std::max(x, y) + 1);
      return from_visits(v);
    }
  }
  return std::nullopt;
}

std::vector<LinkDiagram> r3_neighbors(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  if (d.crossings.size() < 3) return out;
  FaceData f = trace_faces(d);
  ArcEnds ends = arc_ends(d);
  auto pos = arc_positions(d);
  auto cycles = component_cycles(d);
  for (int fid = 0; fid < f.n_faces; ++fid) {
    const auto& arcs = f.face_arcs[size_t(fid)];
    if (arcs.size() != 3) continue;
    if (arcs[0] == arcs[1] || arcs[0] == arcs[2] || arcs[1] == arcs[2]) continue;
    std::set<int> corners;
    for (int e : arcs) {
      corners.insert(ends.tail[size_t(e)]);
      corners.insert(ends.head[size_t(e)]);
    }
    if (corners.size() != 3) continue;
    // sides must come as one fully-over, one fully-under, one mixed
    int n_over = 0, n_under = 0, n_mixed = 0;
    for (int e : arcs) {
      bool ot = d.crossings[size_t(ends.tail[size_t(e)])].oout() == e;
      bool oh = d.crossings[size_t(ends.head[size_t(e)])].oin() == e;
      if (ot && oh)
        ++n_over;
      else if (!ot && !oh)
        ++n_under;
      else
        ++n_mixed;
    }
    if (n_over != 1 || n_under != 1 || n_mixed != 1) continue;
    VisitLists v = to_visits(d);
    for (int e : arcs) {
      auto [c, t] = pos[size_t(e)];
      int m = int(cycles[size_t(c)].size());
      std::swap(v.comps[size_t(c)][size_t((t + m - 1) % m)], v.comps[size_t(c)][size_t(t)]);
    }
    out.push_back(from_visits(v));
  }
  return out;
}

LinkDiagram r1_add(const LinkDiagram& d, int arc, int sign) {
  if (arc < 1 || arc > d.arc_count) throw BadParams("no such arc");
  if (sign != 1 && sign != -1) throw BadParams("kink sign must be +1 or -1");
  ArcEnds ends = arc_ends(d);
  std::vector<std::array<int, 4>> quads;
  quads.reserve(d.crossings.size() + 1);
  for (const auto& c : d.crossings) {
    std::array<int, 4> q{};
    for (int s = 0; s < 4; ++s) q[size_t(s)] = c.a[size_t(s)] + (c.a[size_t(s)] > arc ? 2 : 0);
    quads.push_back(q);
  }
  int e1 = arc, e2 = arc + 1, e3 = arc + 2;
  int hc = ends.head[size_t(arc)];
  int slot = d.crossings[size_t(hc)].uin() == arc ? 0 : d.crossings[size_t(hc)].slot_oin();
  quads[size_t(hc)][size_t(slot)] = e3;
  if (sign > 0)
    quads.push_back({e1, e3, e2, e2});
  else
    quads.push_back({e1, e2, e2, e3});
  return make_diagram(quads, d.n_components, d.unknotted_free_components);
}

LinkDiagram r2_add(const LinkDiagram& d, int over_arc, int under_arc) {
  if (over_arc == under_arc) throw BadParams("poke needs two distinct arcs");
  for (int a : {over_arc, under_arc})
    if (a < 1 || a > d.arc_count) throw BadParams("no such arc");
  FaceData fd = trace_faces(d);
  int use_fid = -1;
  for (int fid = 0; fid < fd.n_faces && use_fid < 0; ++fid) {
    const auto& arcs = fd.face_arcs[size_t(fid)];
    if (std::count(arcs.begin(), arcs.end(), over_arc) > 0 &&
        std::count(arcs.begin(), arcs.end(), under_arc) > 0)
      use_fid = fid;
  }
  if (use_fid < 0) throw BadParams("arcs do not bound a common face");
  // the poke layout depends on the side the face shows to each strand: the
  // side of the under arc fixes the finger's crossing direction, and the two
  // finger legs only nest without intersecting when the under strand meets
  // them in the opposite boundary order from the over strand
  bool e_right = fd.right_face[size_t(over_arc)] == use_fid;
  bool f_right = fd.right_face[size_t(under_arc)] == use_fid;
  ArcEnds ends = arc_ends(d);
  auto fn = [&](int a) {
    return a + (a > over_arc ? 2 : 0) + (a > under_arc ? 2 : 0);
  };
  std::vector<std::array<int, 4>> quads;
  quads.reserve(d.crossings.size() + 2);
  for (const auto& c : d.crossings) {
    std::array<int, 4> q{};
    for (int s = 0; s < 4; ++s) q[size_t(s)] = fn(c.a[size_t(s)]);
    quads.push_back(q);
  }
  int e1 = fn(over_arc), f1 = fn(under_arc);
  auto retarget = [&](int a, int fresh) {
    int hc = ends.head[size_t(a)];
    int slot = d.crossings[size_t(hc)].uin() == a ? 0 : d.crossings[size_t(hc)].slot_oin();
    quads[size_t(hc)][size_t(slot)] = fresh;
  };
  retarget(over_arc, e1 + 2);
  retarget(under_arc, f1 + 2);
  // fa labels the under strand at the outgoing finger pass, fb at the return
  int fa = (e_right == f_right) ? f1 + 1 : f1;
  int fb = (e_right == f_right) ? f1 : f1 + 1;
  if (f_right) {
    quads.push_back({fa, e1, fa + 1, e1 + 1});      // negative
    quads.push_back({fb, e1 + 2, fb + 1, e1 + 1});  // positive
  } else {
    quads.push_back({fa, e1 + 1, fa + 1, e1});      // positive
    quads.push_back({fb, e1 + 1, fb + 1, e1 + 2});  // negative
  }
  return make_diagram(quads, d.n_components, d.unknotted_free_components);
}

LinkDiagram r3_slide(const LinkDiagram& d, int which) {
  if (which < 0) throw BadParams("slide index cannot be negative");
  auto ns = r3_neighbors(d);
  if (ns.empty()) throw BadParams("no triangle slides available");
  return ns[size_t(which) % ns.size()];
}

namespace {

LinkDiagram greedy_reduce(LinkDiagram d, std::vector<std::string>& log) {
  for (;;) {
    std::string desc;
    if (auto r = r1_remove(d, &desc)) {
      d = *r;
      log.push_back(desc);
      continue;
    }
    if (auto r = r2_remove(d, &desc)) {
      d = *r;
      log.push_back(desc);
      continue;
    }
    break;
  }
  return d;
}

}  // namespace

SimplifyResult simplify(const LinkDiagram& d0, int budget) {
  struct Node {
    LinkDiagram d;
    std::vector<std::string> log;
  };
  Node best;
  best.d = greedy_reduce(d0, best.log);
  if (best.d.crossings.empty() || budget <= 0) return {best.d, best.log};
  std::deque<Node> q{best};
  std::set<std::string> seen{canonical_key(best.d)};
  int expanded = 0;
  while (!q.empty() && expanded < budget) {
    Node cur = std::move(q.front());
    q.pop_front();
    ++expanded;
    auto nbrs = r3_neighbors(cur.d);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      Node nxt;
      nxt.log = cur.log;
      nxt.log.push_back("R3 slide " + std::to_string(i + 1));
      nxt.d = greedy_reduce(nbrs[i], nxt.log);
      if (nxt.d.crossings.size() < best.d.crossings.size()) best = nxt;
      if (best.d.crossings.empty()) return {best.d, best.log};
      if (seen.insert(canonical_key(nxt.d)).second) q.push_back(std::move(nxt));
    }
  }
  return {best.d, best.log};
}

LinkDiagram scrambled(const LinkDiagram& d, std::uint64_t seed, int n_moves,
                      bool allow_r1, int crossing_cap) {
  std::mt19937_64 rng(seed);
  LinkDiagram cur = d;
  for (int step = 0; step < n_moves; ++step) {
    enum Kind { kR1Add, kR2Add, kR3, kR1Rem, kR2Rem };
    std::vector<Kind> menu;
    int nc = int(cur.crossings.size());
    FaceData fd = trace_faces(cur);
    std::vector<int> pokable;  // faces offering two distinct arcs
    for (int fid = 0; fid < fd.n_faces; ++fid) {
      const auto& arcs = fd.face_arcs[size_t(fid)];
      std::set<int> uniq(arcs.begin(), arcs.end());
      if (uniq.size() >= 2) pokable.push_back(fid);
    }
    if (allow_r1 && cur.arc_count >= 1 && nc + 1 <= crossing_cap) menu.push_back(kR1Add);
    if (!pokable.empty() && nc + 2 <= crossing_cap) menu.push_back(kR2Add);
    auto r3s = r3_neighbors(cur);
    if (!r3s.empty()) menu.push_back(kR3);
    if (allow_r1 && r1_remove(cur)) menu.push_back(kR1Rem);
    if (r2_remove(cur)) menu.push_back(kR2Rem);
    if (menu.empty()) break;
    switch (menu[size_t(rng() % menu.size())]) {
      case kR1Add: {
        int arc = 1 + int(rng() % std::uint64_t(cur.arc_count));
        cur = r1_add(cur, arc, rng() & 1 ? 1 : -1);
        break;
      }
      case kR2Add: {
        int fid = pokable[size_t(rng() % pokable.size())];
        std::set<int> uniq(fd.face_arcs[size_t(fid)].begin(),
                           fd.face_arcs[size_t(fid)].end());
        std::vector<int> arcs(uniq.begin(), uniq.end());
        size_t i = rng() % arcs.size();
        size_t j = rng() % (arcs.size() - 1);
        if (j >= i) ++j;
        cur = r2_add(cur, arcs[i], arcs[j]);
        break;
      }
      case kR3:
        cur = r3s[size_t(rng() % r3s.size())];
        break;
      case kR1Rem:
        cur = *r1_remove(cur);
        break;
      case kR2Rem:
        cur = *r2_remove(cur);
        break;
    }
  }
  return cur;
}

}  // namespace linkkit
