#include "linkkit/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace linkkit {

namespace {

struct Occ {
  int ci = -1, slot = -1;
};

std::string arc_str(int a) { return std::to_string(a); }

// occurrence table; throws ArcMultiplicity unless every arc 1..max appears twice
std::vector<std::array<Occ, 2>> occurrences(const std::vector<std::array<int, 4>>& quads,
                                            int& arc_count) {
  arc_count = 0;
  for (const auto& q : quads)
    for (int x : q) {
      if (x <= 0) throw ArcMultiplicity("arc labels must be positive, got " + arc_str(x));
      arc_count = std::max(arc_count, x);
    }
  std::vector<int> cnt(size_t(arc_count) + 1, 0);
  std::vector<std::array<Occ, 2>> occ(size_t(arc_count) + 1);
  for (int ci = 0; ci < int(quads.size()); ++ci)
    for (int s = 0; s < 4; ++s) {
      int e = quads[size_t(ci)][size_t(s)];
      if (cnt[size_t(e)] >= 2)
        throw ArcMultiplicity("arc " + arc_str(e) + " appears more than twice");
      occ[size_t(e)][size_t(cnt[size_t(e)]++)] = {ci, s};
    }
  for (int e = 1; e <= arc_count; ++e)
    if (cnt[size_t(e)] != 2)
      throw ArcMultiplicity("arc " + arc_str(e) + " appears " +
                            std::to_string(cnt[size_t(e)]) + " times, need 2");
  return occ;
}

enum Role { kUnknown = 0, kIn = 1, kOut = 2 };

Role role_at(const std::vector<std::array<int, 4>>& quads, const std::vector<int>& sign,
             Occ o) {
  (void)quads;
  if (o.slot == 0) return kIn;
  if (o.slot == 2) return kOut;
  int sg = sign[size_t(o.ci)];
  if (sg == 0) return kUnknown;
  if (o.slot == 1) return sg > 0 ? kOut : kIn;  // slot 1: oout when positive
  return sg > 0 ? kIn : kOut;                   // slot 3: oin when positive
}

// over-strand directions: propagate from known in/out roles, break remaining
// ties with the increasing-arc-label rule
std::vector<int> resolve_signs(const std::vector<std::array<int, 4>>& quads,
                               const std::vector<std::array<Occ, 2>>& occ) {
  std::vector<int> sign(quads.size(), 0);
  size_t unresolved = quads.size();
  auto other = [&](int e, Occ me) {
    return (occ[size_t(e)][0].ci == me.ci && occ[size_t(e)][0].slot == me.slot)
               ? occ[size_t(e)][1]
               : occ[size_t(e)][0];
  };
  auto set_sign = [&](int ci, int slot, Role r) {
    // role r observed at this over slot fixes the crossing sign
    int sg;
    if (slot == 1)
      sg = (r == kOut) ? +1 : -1;
    else
      sg = (r == kOut) ? -1 : +1;
    if (sign[size_t(ci)] != 0 && sign[size_t(ci)] != sg)
      throw InconsistentOrientation("over-strand direction conflict at crossing " +
                                    std::to_string(ci + 1));
    if (sign[size_t(ci)] == 0) {
      sign[size_t(ci)] = sg;
      --unresolved;
    }
  };
  while (unresolved > 0) {
    bool progress = false;
    for (int ci = 0; ci < int(quads.size()); ++ci) {
      if (sign[size_t(ci)] != 0) continue;
      for (int slot : {1, 3}) {
        int e = quads[size_t(ci)][size_t(slot)];
        Occ o = other(e, Occ{ci, slot});
        if (o.ci == ci && (o.slot == 1 || o.slot == 3)) continue;  // same over pair
        Role r = role_at(quads, sign, o);
        if (r == kUnknown) continue;
        set_sign(ci, slot, r == kIn ? kOut : kIn);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // an all-over orbit: orient by arc labels (successor = label + 1, wrap to min)
    int pick = -1;
    for (int ci = 0; ci < int(quads.size()); ++ci)
      if (sign[size_t(ci)] == 0) {
        pick = ci;
        break;
      }
    if (pick < 0) break;
    int b = quads[size_t(pick)][1], d = quads[size_t(pick)][3];
    int sg;
    if (d == b + 1)
      sg = -1;  // slot 1 is the incoming side
    else if (b == d + 1)
      sg = +1;
    else
      sg = (b < d) ? +1 : -1;  // wrap: outgoing side carries the smaller label
    sign[size_t(pick)] = sg;
    --unresolved;
  }
  return sign;
}

}  // namespace

LinkDiagram make_diagram(const std::vector<std::array<int, 4>>& quads,
                         int declared_components, int free_circles) {
  if (free_circles < 0) throw ComponentMismatch("negative free-circle count");
  LinkDiagram d;
  d.arc_count = 0;
  auto occ = occurrences(quads, d.arc_count);
  auto sign = resolve_signs(quads, occ);
  d.crossings.reserve(quads.size());
  for (size_t i = 0; i < quads.size(); ++i) d.crossings.push_back({quads[i], sign[i]});

  // role sanity: every arc consumed once and emitted once
  std::vector<int> n_in(size_t(d.arc_count) + 1, 0), n_out(size_t(d.arc_count) + 1, 0);
  for (const auto& c : d.crossings) {
    ++n_in[size_t(c.uin())];
    ++n_out[size_t(c.uout())];
    ++n_in[size_t(c.oin())];
    ++n_out[size_t(c.oout())];
  }
  for (int e = 1; e <= d.arc_count; ++e)
    if (n_in[size_t(e)] != 1 || n_out[size_t(e)] != 1)
      throw InconsistentOrientation("arc " + arc_str(e) +
                                    " is not consumed and emitted exactly once");

  // successor map and component cycles
  std::vector<int> succ(size_t(d.arc_count) + 1, 0);
  for (const auto& c : d.crossings) {
    succ[size_t(c.uin())] = c.uout();
    succ[size_t(c.oin())] = c.oout();
  }
  d.component_of_arc.assign(size_t(d.arc_count) + 1, 0);
  int traced = 0;
  for (int e = 1; e <= d.arc_count; ++e) {
    if (d.component_of_arc[size_t(e)] != 0) continue;
    ++traced;  // e is the least arc of its cycle
    int cur = e;
    do {
      d.component_of_arc[size_t(cur)] = traced;
      int nxt = succ[size_t(cur)];
      if (nxt != e && nxt < cur)
        throw InconsistentOrientation("arc labels must increase along a component: " +
                                      arc_str(cur) + " -> " + arc_str(nxt));
      cur = nxt;
    } while (cur != e);
  }
  d.unknotted_free_components = free_circles;
  d.n_components = traced + free_circles;
  if (declared_components >= 0 && declared_components != d.n_components)
    throw ComponentMismatch("declared components=" + std::to_string(declared_components) +
                            " but diagram has " + std::to_string(d.n_components));
  return d;
}

void validate(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> quads;
  quads.reserve(d.crossings.size());
  for (const auto& c : d.crossings) quads.push_back(c.a);
  LinkDiagram r = make_diagram(quads, d.n_components, d.unknotted_free_components);
  for (size_t i = 0; i < quads.size(); ++i)
    if (r.crossings[i].sign != d.crossings[i].sign)
      throw InconsistentOrientation("stored sign disagrees at crossing " +
                                    std::to_string(i + 1));
  if (r.component_of_arc != d.component_of_arc)
    throw ComponentMismatch("stored component labels disagree with traced ones");
}

int successor_arc(const LinkDiagram& d, int arc) {
  for (const auto& c : d.crossings) {
    if (c.uin() == arc) return c.uout();
    if (c.oin() == arc) return c.oout();
  }
  throw BadSelector("no such arc: " + arc_str(arc));
}

std::vector<std::vector<int>> component_cycles(const LinkDiagram& d) {
  std::vector<int> succ(size_t(d.arc_count) + 1, 0);
  for (const auto& c : d.crossings) {
    succ[size_t(c.uin())] = c.uout();
    succ[size_t(c.oin())] = c.oout();
  }
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(size_t(d.arc_count) + 1, 0);
  for (int e = 1; e <= d.arc_count; ++e) {
    if (seen[size_t(e)]) continue;
    std::vector<int> cyc;
    int cur = e;
    do {
      seen[size_t(cur)] = 1;
      cyc.push_back(cur);
      cur = succ[size_t(cur)];
    } while (cur != e);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

int self_writhe(const LinkDiagram& d, int comp) {
  int w = 0;
  for (const auto& c : d.crossings)
    if (d.comp_of(c.uin()) == comp && d.comp_of(c.oin()) == comp) w += c.sign;
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram m = d;
  for (auto& c : m.crossings) {
    int nuin = c.oin(), nuout = c.oout(), noin = c.uin(), noout = c.uout();
    int ns = -c.sign;
    if (ns > 0)
      c.a = {nuin, noout, nuout, noin};
    else
      c.a = {nuin, noin, nuout, noout};
    c.sign = ns;
  }
  return m;
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& sel,
                    std::vector<int>* arc_image) {
  if (sel.empty()) throw BadSelector("empty component selection");
  std::vector<char> keep(size_t(d.n_components) + 1, 0);
  for (int s : sel) {
    if (s < 1 || s > d.n_components)
      throw BadSelector("component " + std::to_string(s) + " out of range");
    if (keep[size_t(s)]) throw BadSelector("component " + std::to_string(s) + " repeated");
    keep[size_t(s)] = 1;
  }
  int traced = d.n_components - d.unknotted_free_components;
  int kept_free = 0;
  for (int c = traced + 1; c <= d.n_components; ++c)
    if (keep[size_t(c)]) ++kept_free;

  enum CrossKind { kDrop, kBridge, kKeep };
  std::vector<CrossKind> kind(d.crossings.size());
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    bool ku = keep[size_t(d.comp_of(c.uin()))];
    bool ko = keep[size_t(d.comp_of(c.oin()))];
    kind[i] = ku && ko ? kKeep : (ku || ko ? kBridge : kDrop);
  }

  // walk kept components; crossing a bridged crossing glues the two arcs into one
  std::vector<int> tail_ci(size_t(d.arc_count) + 1, -1);  // crossing emitting the arc
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    tail_ci[size_t(d.crossings[i].uout())] = int(i);
    tail_ci[size_t(d.crossings[i].oout())] = int(i);
  }

  std::vector<int> image(size_t(d.arc_count) + 1, 0);
  int next_arc = 0, new_free = kept_free;
  auto cycles = component_cycles(d);
  for (const auto& cyc : cycles) {
    if (!keep[size_t(d.comp_of(cyc[0]))]) continue;
    std::vector<int> starts;  // arcs whose tail crossing survives
    for (int e : cyc)
      if (kind[size_t(tail_ci[size_t(e)])] == kKeep) starts.push_back(e);
    if (starts.empty()) {  // every crossing on this component went away
      ++new_free;
      continue;
    }
    int begin = *std::min_element(starts.begin(), starts.end());
    size_t pos = size_t(std::find(cyc.begin(), cyc.end(), begin) - cyc.begin());
    int cur_id = 0;
    for (size_t t = 0; t < cyc.size(); ++t) {
      int e = cyc[(pos + t) % cyc.size()];
      if (t == 0 || std::find(starts.begin(), starts.end(), e) != starts.end())
        cur_id = ++next_arc;
      image[size_t(e)] = cur_id;
    }
  }

  std::vector<std::array<int, 4>> quads;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    if (kind[i] != kKeep) continue;
    const auto& q = d.crossings[i].a;
    quads.push_back({image[size_t(q[0])], image[size_t(q[1])], image[size_t(q[2])],
                     image[size_t(q[3])]});
  }
  if (arc_image) *arc_image = image;
  return make_diagram(quads, -1, new_free);
}

FaceData trace_faces(const LinkDiagram& d) {
  FaceData f;
  int nc = int(d.crossings.size());
  f.corner_face.assign(size_t(nc), {-1, -1, -1, -1});
  f.right_face.assign(size_t(d.arc_count) + 1, -1);
  f.left_face.assign(size_t(d.arc_count) + 1, -1);
  f.shadow_part_of_crossing.assign(size_t(nc), -1);
  if (nc == 0) {
    f.n_faces = 0;
    return f;
  }

  int arc_count = d.arc_count;
  std::vector<std::array<Occ, 2>> occ(size_t(arc_count) + 1);
  std::vector<int> cnt(size_t(arc_count) + 1, 0);
  for (int ci = 0; ci < nc; ++ci)
    for (int s = 0; s < 4; ++s) {
      int e = d.crossings[size_t(ci)].a[size_t(s)];
      occ[size_t(e)][size_t(cnt[size_t(e)]++)] = {ci, s};
    }
  auto other = [&](int e, int ci, int s) {
    const auto& o = occ[size_t(e)];
    return (o[0].ci == ci && o[0].slot == s) ? o[1] : o[0];
  };
  auto is_out = [&](int ci, int s) {
    const auto& c = d.crossings[size_t(ci)];
    return s == 2 || s == c.slot_oout();
  };

  for (int ci = 0; ci < nc; ++ci)
    for (int s = 0; s < 4; ++s) {
      if (f.corner_face[size_t(ci)][size_t(s)] != -1) continue;
      int fid = f.n_faces++;
      f.face_arcs.emplace_back();
      int cc = ci, cs = s;
      do {
        f.corner_face[size_t(cc)][size_t(cs)] = fid;
        int t = (cs + 1) % 4;
        int e = d.crossings[size_t(cc)].a[size_t(t)];
        f.face_arcs[size_t(fid)].push_back(e);
        if (is_out(cc, t))
          f.right_face[size_t(e)] = fid;  // walked along the arc's orientation
        else
          f.left_face[size_t(e)] = fid;
        Occ nx = other(e, cc, t);
        cc = nx.ci;
        cs = nx.slot;
      } while (cc != ci || cs != s);
    }

  // connected pieces of the shadow
  std::vector<int> uf(size_t(nc), 0);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[size_t(x)] != x) x = uf[size_t(x)] = uf[size_t(uf[size_t(x)])];
    return x;
  };
  for (int e = 1; e <= arc_count; ++e) uf[size_t(find(occ[size_t(e)][0].ci))] = find(occ[size_t(e)][1].ci);
  std::map<int, int> part_id;
  for (int ci = 0; ci < nc; ++ci) {
    int r = find(ci);
    auto it = part_id.find(r);
    if (it == part_id.end()) it = part_id.emplace(r, int(part_id.size())).first;
    f.shadow_part_of_crossing[size_t(ci)] = it->second;
  }
  f.n_parts = int(part_id.size());

  // outer face per piece: fewest arc traversals, then least sorted arc list
  std::vector<int> face_part(size_t(f.n_faces), -1);
  for (int ci = 0; ci < nc; ++ci)
    for (int s = 0; s < 4; ++s)
      face_part[size_t(f.corner_face[size_t(ci)][size_t(s)])] =
          f.shadow_part_of_crossing[size_t(ci)];
  f.outer_face_of_part.assign(size_t(f.n_parts), -1);
  std::vector<std::vector<int>> sorted_arcs(size_t(f.n_faces));
  for (int fi = 0; fi < f.n_faces; ++fi) {
    sorted_arcs[size_t(fi)] = f.face_arcs[size_t(fi)];
    std::sort(sorted_arcs[size_t(fi)].begin(), sorted_arcs[size_t(fi)].end());
  }
  for (int fi = 0; fi < f.n_faces; ++fi) {
    int p = face_part[size_t(fi)];
    int& best = f.outer_face_of_part[size_t(p)];
    if (best < 0 ||
        f.face_arcs[size_t(fi)].size() < f.face_arcs[size_t(best)].size() ||
        (f.face_arcs[size_t(fi)].size() == f.face_arcs[size_t(best)].size() &&
         sorted_arcs[size_t(fi)] < sorted_arcs[size_t(best)]))
      best = fi;
  }
  int part_of_arc1 = f.shadow_part_of_crossing[size_t(occ[1][0].ci)];
  f.infinity_face = f.outer_face_of_part[size_t(part_of_arc1)];
  if (f.n_faces != nc + 2 * f.n_parts)
    throw SemanticError("crossing data does not describe a planar diagram");
  return f;
}

LinkDiagram renumbered(const LinkDiagram& d) {
  auto cycles = component_cycles(d);
  std::vector<int> image(size_t(d.arc_count) + 1, 0);
  int next = 0;
  for (const auto& cyc : cycles)
    for (int e : cyc) image[size_t(e)] = ++next;
  LinkDiagram r = d;
  for (auto& c : r.crossings)
    for (auto& x : c.a) x = image[size_t(x)];
  for (int e = 1; e <= d.arc_count; ++e)
    r.component_of_arc[size_t(image[size_t(e)])] = d.component_of_arc[size_t(e)];
  return r;
}

namespace {

std::string key_string(const LinkDiagram& d, std::vector<std::array<int, 4>> quads,
                       const char* prefix) {
  std::sort(quads.begin(), quads.end());
  std::ostringstream os;
  os << prefix << "n=" << d.n_components << ";u=" << d.unknotted_free_components << ";";
  for (const auto& q : quads)
    os << "X(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
  return os.str();
}

}  // namespace

// least relabeling over component order and per-component start arc; beyond the
// enumeration budget the key is only deterministic, not relabeling-invariant
std::string canonical_key(const LinkDiagram& d) {
  auto cycles = component_cycles(d);
  int T = int(cycles.size());
  long long combos = 1;
  for (int t = 2; t <= T; ++t) combos *= t;
  for (const auto& cyc : cycles) {
    combos *= (long long)cyc.size();
    if (combos > 20000) break;
  }
  if (combos > 20000) {
    LinkDiagram r = renumbered(d);
    std::vector<std::array<int, 4>> quads;
    for (const auto& c : r.crossings) quads.push_back(c.a);
    return key_string(d, std::move(quads), "~");
  }

  std::vector<int> order(size_t(T), 0);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::array<int, 4>> best;
  bool have = false;
  do {
    std::vector<size_t> rot(size_t(T), 0);
    for (;;) {
      std::vector<int> image(size_t(d.arc_count) + 1, 0);
      int next = 0;
      for (int ci : order) {
        const auto& cyc = cycles[size_t(ci)];
        for (size_t t = 0; t < cyc.size(); ++t)
          image[size_t(cyc[(rot[size_t(ci)] + t) % cyc.size()])] = ++next;
      }
      std::vector<std::array<int, 4>> quads;
      quads.reserve(d.crossings.size());
      for (const auto& c : d.crossings)
        quads.push_back({image[size_t(c.a[0])], image[size_t(c.a[1])],
                         image[size_t(c.a[2])], image[size_t(c.a[3])]});
      std::sort(quads.begin(), quads.end());
      if (!have || quads < best) {
        best = std::move(quads);
        have = true;
      }
      size_t k = 0;
      while (k < size_t(T)) {
        if (++rot[k] < cycles[k].size()) break;
        rot[k] = 0;
        ++k;
      }
      if (k == size_t(T)) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return key_string(d, std::move(best), "");
}

}  // namespace linkkit
