#include "linkkit/seifert.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

// The surface is realized concretely: every Seifert circle bounds a disk,
// nested disks are stacked by region-tree depth, and each crossing becomes a
// half-twisted band in the annular gap between its two circles. Basis loops
// run once through their own band and back along spanning-tree bands. Each
// loop is drawn on the surface as, per disk, a radial spur in from the entry
// attachment, a counterclockwise run hugging the boundary at a depth private
// to the loop, and a spur back out; crossing a band that hangs off an
// enclosing disk additionally hops over every run it passes. lk(e_a, e_b^+)
// is then read off as half the signed crossing count between the projected
// curves, which decomposes into spur/run, hop/run, and in-band terms below.

namespace linkkit {
namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("seifert: ") + what);
}

struct Uf {
  std::vector<int> p;
  explicit Uf(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

struct Pass {  // one traversal of a band by a basis loop
  int loop = 0;
  int from = 0;  // circle the loop comes from
};

struct Transit {  // one traversal of a disk
  int loop = 0;
  int in_band = 0, out_band = 0;
  long long pin = 0, pout = 0;  // fine ccw coordinates of the two spurs
};

}  // namespace

namespace detail {

IntMatrix seifert_matrix_tuned(const LinkDiagram& d, const SeifertConventions& conv) {
  const int nc = int(d.crossings.size());
  if (nc == 0) {
    if (d.n_components == 1) return IntMatrix(0, 0);
    throw Disconnected("seifert surface needs a connected diagram");
  }
  if (d.unknotted_free_components > 0)
    throw Disconnected("seifert surface needs a connected diagram");
  FaceData fd = trace_faces(d);
  if (fd.n_parts > 1) throw Disconnected("seifert surface needs a connected shadow");

  const int na = d.arc_count;

  // Seifert circles: follow the orientation-respecting smoothing.
  std::vector<int> snext(na + 1, 0), head(na + 1, -1);
  for (int x = 0; x < nc; ++x) {
    const Crossing& c = d.crossings[x];
    snext[c.uin()] = c.oout();
    snext[c.oin()] = c.uout();
    head[c.uin()] = x;
    head[c.oin()] = x;
  }
  std::vector<int> circle_of(na + 1, -1);
  std::vector<std::vector<int>> circ_arcs;
  for (int a = 1; a <= na; ++a) {
    if (circle_of[a] >= 0) continue;
    int id = int(circ_arcs.size());
    circ_arcs.emplace_back();
    for (int e = a; circle_of[e] < 0; e = snext[e]) {
      circle_of[e] = id;
      circ_arcs[id].push_back(e);
    }
  }
  const int s = int(circ_arcs.size());

  // Both strands of a crossing sit on distinct circles (the smoothing joins
  // them), so walking a circle meets each incident crossing exactly once.
  std::vector<int> cu(nc), cv(nc);
  for (int x = 0; x < nc; ++x) {
    cu[x] = circle_of[d.crossings[x].uin()];
    cv[x] = circle_of[d.crossings[x].oin()];
    ensure(cu[x] != cv[x], "crossing strands landed on one circle");
  }
  std::vector<std::map<int, int>> walkpos(s);
  for (int c = 0; c < s; ++c)
    for (size_t i = 0; i < circ_arcs[c].size(); ++i) {
      bool fresh = walkpos[c].emplace(head[circ_arcs[c][i]], int(i)).second;
      ensure(fresh, "crossing met twice along a circle");
    }

  // Complement regions of the smoothed picture: faces merge across each
  // crossing at the corner pair the smoothing opens up.
  Uf uf(fd.n_faces);
  for (int x = 0; x < nc; ++x) {
    const auto& cf = fd.corner_face[x];
    if (d.crossings[x].sign > 0)
      uf.unite(cf[1], cf[3]);
    else
      uf.unite(cf[0], cf[2]);
  }
  {
    int regions = 0;
    for (int f = 0; f < fd.n_faces; ++f)
      if (uf.find(f) == f) ++regions;
    ensure(regions == s + 1, "region count is off");
  }
  std::vector<int> lreg(s, -1), rreg(s, -1);
  for (int c = 0; c < s; ++c)
    for (int e : circ_arcs[c]) {
      int L = uf.find(fd.left_face[e]), R = uf.find(fd.right_face[e]);
      if (lreg[c] < 0) {
        lreg[c] = L;
        rreg[c] = R;
      } else {
        ensure(lreg[c] == L && rreg[c] == R, "circle sides are inconsistent");
      }
    }

  // Region tree rooted at the unbounded region; each circle separates its
  // child region from the rest, and is counterclockwise iff its interior
  // (= child side) lies left of its orientation.
  std::vector<std::vector<std::pair<int, int>>> radj(fd.n_faces);
  for (int c = 0; c < s; ++c) {
    radj[lreg[c]].push_back({c, rreg[c]});
    radj[rreg[c]].push_back({c, lreg[c]});
  }
  const int root = uf.find(fd.infinity_face);
  std::vector<int> rdepth(fd.n_faces, -1);
  rdepth[root] = 0;
  std::queue<int> bfs;
  bfs.push(root);
  int seen = 1;
  while (!bfs.empty()) {
    int r = bfs.front();
    bfs.pop();
    for (auto [c, o] : radj[r])
      if (rdepth[o] < 0) {
        rdepth[o] = rdepth[r] + 1;
        bfs.push(o);
        ++seen;
      }
  }
  ensure(seen == s + 1, "region tree is not connected");
  std::vector<int> childreg(s), parreg(s);
  std::vector<char> ccw(s);
  for (int c = 0; c < s; ++c) {
    ensure(rdepth[lreg[c]] != rdepth[rreg[c]], "region tree has a cycle");
    bool left_deeper = rdepth[lreg[c]] > rdepth[rreg[c]];
    childreg[c] = left_deeper ? lreg[c] : rreg[c];
    parreg[c] = left_deeper ? rreg[c] : lreg[c];
    ensure(rdepth[childreg[c]] == rdepth[parreg[c]] + 1, "skewed region depths");
    ccw[c] = left_deeper;
  }

  // Angular index of each attachment, counted counterclockwise.
  std::vector<std::map<int, int>> posccw(s);
  for (int c = 0; c < s; ++c) {
    int k = int(circ_arcs[c].size());
    for (auto [x, i] : walkpos[c]) posccw[c][x] = ccw[c] ? i : (k - 1 - i);
  }

  // Spanning tree of the circle graph from the circle through arc 1.
  const int base = circle_of[1];
  std::vector<int> parc(s, -1), paredge(s, -1), cdepth(s, -1);
  std::vector<char> intree(nc, 0);
  cdepth[base] = 0;
  std::queue<int> q2;
  q2.push(base);
  while (!q2.empty()) {
    int c = q2.front();
    q2.pop();
    for (int x = 0; x < nc; ++x) {
      if (cu[x] != c && cv[x] != c) continue;
      int o = cu[x] == c ? cv[x] : cu[x];
      if (cdepth[o] >= 0) continue;
      cdepth[o] = cdepth[c] + 1;
      parc[o] = c;
      paredge[o] = x;
      intree[x] = 1;
      q2.push(o);
    }
  }
  for (int c = 0; c < s; ++c) ensure(cdepth[c] >= 0, "circle graph is not connected");

  // Surface co-orientation per disk: determined by the rotation sense of the
  // rim, not by nesting depth (all disks of one sense are co-oriented alike).
  std::vector<int> nu(s, 0);
  for (int c = 0; c < s; ++c) nu[c] = conv.nu_anchor * (ccw[c] ? 1 : -1);

  // Basis loops: non-tree crossings by index. Loop for x runs through its own
  // band from the under-strand circle U to the over-strand circle V, then
  // back along the tree path.
  std::vector<int> basis;
  for (int x = 0; x < nc; ++x)
    if (!intree[x]) basis.push_back(x);
  const int r = int(basis.size());
  ensure(r == nc - s + 1, "basis rank is off");

  std::vector<std::vector<Pass>> band_pass(nc);
  std::vector<std::vector<Transit>> disk_tr(s);
  std::vector<std::vector<std::pair<int, Transit*>>> loop_tr;  // (circle, transit)

  for (int b = 0; b < r; ++b) {
    int x = basis[b];
    int U = cu[x], V = cv[x];
    std::vector<int> up_v, up_u;
    int pv = V, pu = U;
    while (cdepth[pv] > cdepth[pu]) {
      up_v.push_back(paredge[pv]);
      pv = parc[pv];
    }
    while (cdepth[pu] > cdepth[pv]) {
      up_u.push_back(paredge[pu]);
      pu = parc[pu];
    }
    while (pv != pu) {
      up_v.push_back(paredge[pv]);
      pv = parc[pv];
      up_u.push_back(paredge[pu]);
      pu = parc[pu];
    }
    std::vector<int> bands = up_v;
    bands.insert(bands.end(), up_u.rbegin(), up_u.rend());
    const int m = int(bands.size());
    ensure(m >= 1, "basis loop collapsed");

    band_pass[x].push_back({b, U});
    int disk = V;
    for (int i = 0; i <= m; ++i) {
      Transit t;
      t.loop = b;
      t.in_band = i == 0 ? x : bands[i - 1];
      t.out_band = i < m ? bands[i] : x;
      disk_tr[disk].push_back(t);
      if (i < m) {
        int y = bands[i];
        band_pass[y].push_back({b, disk});
        disk = cu[y] == disk ? cv[y] : cu[y];
      }
    }
    ensure(disk == U, "tree path did not close up");
  }

  size_t maxpass = 1;
  for (int y = 0; y < nc; ++y) maxpass = std::max(maxpass, band_pass[y].size());
  const long long M = (long long)maxpass + 2;

  // Fine ccw coordinate of a passage's attachment on circle c. Tracks across
  // a band keep one order on the under-strand side and the reverse on the
  // other (the half twist swaps them); both are phrased in walk order, so
  // clockwise circles flip once more.
  auto fpos = [&](int c, int y, int idx) -> long long {
    int t = int(band_pass[y].size());
    int walk_rank = (c == cu[y]) ? idx : (t - 1 - idx);
    int off = ccw[c] ? walk_rank : (t - 1 - walk_rank);
    return (long long)posccw[c].at(y) * M + off;
  };
  auto pass_index = [&](int y, int loop) {
    for (size_t i = 0; i < band_pass[y].size(); ++i)
      if (band_pass[y][i].loop == loop) return int(i);
    ensure(false, "passage lookup failed");
    return -1;
  };
  for (int c = 0; c < s; ++c)
    for (Transit& t : disk_tr[c]) {
      t.pin = fpos(c, t.in_band, pass_index(t.in_band, t.loop));
      t.pout = fpos(c, t.out_band, pass_index(t.out_band, t.loop));
    }

  std::vector<std::vector<long long>> tot(r, std::vector<long long>(r, 0));

  // In-band terms: two passages cross once where the band twists, and each
  // passage links the push-off of its own core there.
  for (int y = 0; y < nc; ++y) {
    int eps = d.crossings[y].sign;
    const auto& ps = band_pass[y];
    for (const Pass& p : ps) {
      tot[p.loop][p.loop] += conv.band_self * eps;
      for (const Pass& q : ps) {
        if (&p == &q) continue;
        int dp = p.from == cu[y] ? 1 : -1;
        int dq = q.from == cu[y] ? 1 : -1;
        tot[p.loop][q.loop] += conv.band_pass * eps * dp * dq;
      }
    }
  }

  // Spur/run terms: p's radial spur crosses q's boundary run when q hugs the
  // disk shallower than p plunges and its run covers the spur's angle. The
  // disk co-orientation decides which copy is on top, so these are the only
  // asymmetric contributions.
  auto inside = [](long long st, long long en, long long x, long long L) {
    long long rx = ((x - st) % L + L) % L;
    long long re = ((en - st) % L + L) % L;
    return rx > 0 && rx < re;
  };
  for (int c = 0; c < s; ++c) {
    long long L = (long long)circ_arcs[c].size() * M;
    for (const Transit& p : disk_tr[c])
      for (const Transit& q : disk_tr[c]) {
        if (q.loop >= p.loop) continue;
        if (inside(q.pin, q.pout, p.pin, L)) {
          tot[p.loop][q.loop] += nu[c];
          tot[q.loop][p.loop] -= nu[c];
        }
        if (inside(q.pin, q.pout, p.pout, L)) {
          tot[p.loop][q.loop] -= nu[c];
          tot[q.loop][p.loop] += nu[c];
        }
      }
  }

  // Hop/run terms: a passage through a band hanging off an enclosing disk
  // clears that disk's rim, passing over every run it covers; heading toward
  // the child disk points radially inward.
  for (int y = 0; y < nc; ++y) {
    int P, C;
    if (childreg[cu[y]] == parreg[cv[y]]) {
      P = cu[y];
      C = cv[y];
    } else if (childreg[cv[y]] == parreg[cu[y]]) {
      P = cv[y];
      C = cu[y];
    } else {
      ensure(parreg[cu[y]] == parreg[cv[y]], "band joins non-adjacent regions");
      continue;  // sibling disks: the band crosses no rim
    }
    long long L = (long long)circ_arcs[P].size() * M;
    for (size_t i = 0; i < band_pass[y].size(); ++i) {
      const Pass& p = band_pass[y][i];
      long long hop = fpos(P, y, int(i));
      int sgn = p.from == P ? -1 : 1;
      for (const Transit& q : disk_tr[P]) {
        if (!inside(q.pin, q.pout, hop, L)) continue;
        ensure(q.loop != p.loop, "loop hopped its own run");
        tot[p.loop][q.loop] += sgn;
        tot[q.loop][p.loop] += sgn;
      }
    }
  }

  IntMatrix V(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      ensure(tot[i][j] % 2 == 0, "odd crossing total");
      V.at(i, j) = tot[i][j] / 2;
    }
  return V;
}

}  // namespace detail

IntMatrix seifert_matrix(const LinkDiagram& d) {
  return detail::seifert_matrix_tuned(d, detail::SeifertConventions{});
}

}  // namespace linkkit
