#include "linkkit/goeritz.hpp"

#include <deque>
#include <sstream>

#include "linkkit/invariants.hpp"

namespace linkkit {

namespace {

// floor-reduce an exact rational into [0,1)
BigRat mod_one(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return x - BigRat(q);
}

std::string rat_str(const BigRat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

GoeritzData checkerboard(const LinkDiagram& d, int surface_component) {
  int c = surface_component;
  if (c < 1 || c > d.n_components) throw BadSelector("component index out of range");
  for (int m = 1; m <= d.n_components; ++m) {
    if (m == c) continue;
    int lk = linking_number(d, c, m);
    if (lk & 1) {
      std::ostringstream os;
      os << "lk of components " << c << " and " << m << " is " << lk
         << ", which is odd";
      throw OddLinking(os.str());
    }
  }

  GoeritzData out;
  out.surface_component = c;
  out.n_components = d.n_components;
  out.vectors.resize(size_t(d.n_components));

  std::vector<int> arc_image;
  LinkDiagram sub = sublink(d, {c}, &arc_image);
  if (sub.crossings.empty()) return out;  // round circle bounds a disk

  FaceData fd = trace_faces(sub);
  if (fd.n_parts != 1) throw DisconnectedShadow("surface diagram splits into parts");

  // two-color the faces, the unbounded one white
  constexpr int kWhite = 0;
  std::vector<int> color(size_t(fd.n_faces), -1);
  color[size_t(fd.infinity_face)] = kWhite;
  std::deque<int> queue{fd.infinity_face};
  std::vector<std::vector<int>> nbr(size_t(fd.n_faces));
  for (int e = 1; e <= sub.arc_count; ++e) {
    nbr[size_t(fd.left_face[size_t(e)])].push_back(fd.right_face[size_t(e)]);
    nbr[size_t(fd.right_face[size_t(e)])].push_back(fd.left_face[size_t(e)]);
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : nbr[size_t(f)]) {
      if (color[size_t(g)] < 0) {
        color[size_t(g)] = 1 - color[size_t(f)];
        queue.push_back(g);
      } else if (color[size_t(g)] == color[size_t(f)]) {
        throw SemanticError("shadow is not checkerboard colorable");
      }
    }
  }

  std::vector<int> windex(size_t(fd.n_faces), -1);  // white face -> basis slot
  for (int f = 0; f < fd.n_faces; ++f) {
    if (color[size_t(f)] == kWhite && f != fd.infinity_face) {
      windex[size_t(f)] = int(out.white_basis.size());
      out.white_basis.push_back(f);
    }
  }
  int nb = int(out.white_basis.size());

  // crossing incidence: eta(x) = +1 when the white corners sit at 0 and 2
  IntMatrix g(nb, nb);
  std::vector<BigInt> inf_row(size_t(nb), 0);
  for (size_t x = 0; x < sub.crossings.size(); ++x) {
    const auto& corners = fd.corner_face[x];
    int w0 = -1, w1 = -1, eta;
    if (color[size_t(corners[0])] == kWhite) {
      w0 = corners[0];
      w1 = corners[2];
      eta = 1;
    } else {
      w0 = corners[1];
      w1 = corners[3];
      eta = -1;
    }
    if (w0 == w1) continue;  // nugatory: both white corners on one region
    int i0 = windex[size_t(w0)], i1 = windex[size_t(w1)];
    if (i0 >= 0 && i1 >= 0) {
      g.at(i0, i1) -= eta;
      g.at(i1, i0) -= eta;
    } else if (i0 >= 0) {
      inf_row[size_t(i0)] -= eta;
    } else if (i1 >= 0) {
      inf_row[size_t(i1)] -= eta;
    }
  }
  for (int i = 0; i < nb; ++i) {
    BigInt s = inf_row[size_t(i)];
    for (int j = 0; j < nb; ++j)
      if (j != i) s += g.at(i, j);
    g.at(i, i) = -s;  // rows sum to zero over all white regions
  }
  out.goeritz = std::move(g);

  // V(K_m): the white-region boundary curves, pushed off the surface, meet
  // K_m once near each crossing of K_m with a bounding arc; halved signed
  // count = linking number. The boundary runs with its region on the right.
  for (int m = 1; m <= d.n_components; ++m) {
    if (m == c) continue;
    std::vector<BigInt> twice(size_t(nb), 0);
    for (const auto& x : d.crossings) {
      int cu = d.comp_of(x.uin()), co = d.comp_of(x.oin());
      int surf_arc;
      if (cu == c && co == m)
        surf_arc = x.uin();
      else if (co == c && cu == m)
        surf_arc = x.oin();
      else
        continue;
      int e = arc_image[size_t(surf_arc)];
      int fr = fd.right_face[size_t(e)], fl = fd.left_face[size_t(e)];
      if (windex[size_t(fr)] >= 0 && color[size_t(fr)] == kWhite)
        twice[size_t(windex[size_t(fr)])] += x.sign;
      if (windex[size_t(fl)] >= 0 && color[size_t(fl)] == kWhite)
        twice[size_t(windex[size_t(fl)])] -= x.sign;
    }
    auto& v = out.vectors[size_t(m - 1)];
    v.resize(size_t(nb));
    for (int i = 0; i < nb; ++i) {
      if (twice[size_t(i)] % 2 != 0)
        throw SemanticError("white-region linking did not halve evenly");
      v[size_t(i)] = twice[size_t(i)] / 2;
    }
  }
  return out;
}

ResidueMod1 lambda(const GoeritzData& data, int i, int j) {
  if (i < 1 || i > data.n_components || j < 1 || j > data.n_components ||
      i == data.surface_component || j == data.surface_component)
    throw BadSelector("lambda needs two components other than the surface one");
  ResidueMod1 out{BigRat(0), BigRat(0)};
  int nb = int(data.white_basis.size());
  if (nb == 0) return out;  // disk surface

  const auto& vi = data.vectors[size_t(i - 1)];
  const auto& vj = data.vectors[size_t(j - 1)];
  auto y = rat_solve(data.goeritz, vj);
  if (!y) throw SingularGoeritz("Goeritz matrix is singular");
  BigRat val(0);
  for (int k = 0; k < nb; ++k) val += BigRat(vi[size_t(k)]) * (*y)[size_t(k)];
  out.r = mod_one(val);
  out.u = out.r;
  BigRat alt = BigRat(1) - out.r;
  if (alt < out.u) out.u = alt;
  return out;
}

std::string lambda_line(int i, int j, const ResidueMod1& v) {
  std::ostringstream os;
  os << "lambda(" << i << "," << j << ") = " << rat_str(v.r) << " (canonical "
     << rat_str(v.u) << ")";
  return os.str();
}

LambdaReport lambda_compare(const LinkDiagram& a, const LinkDiagram& b,
                            int surface_component) {
  if (a.n_components != b.n_components)
    throw SizeMismatch("links have different component counts");
  GoeritzData da = checkerboard(a, surface_component);
  GoeritzData db = checkerboard(b, surface_component);
  LambdaReport rep;
  for (int i = 1; i <= a.n_components; ++i) {
    if (i == surface_component) continue;
    for (int j = i + 1; j <= a.n_components; ++j) {
      if (j == surface_component) continue;
      ResidueMod1 va = lambda(da, i, j);
      ResidueMod1 vb = lambda(db, i, j);
      rep.lines_a.push_back(lambda_line(i, j, va));
      rep.lines_b.push_back(lambda_line(i, j, vb));
      if (!rep.distinguished && va.u != vb.u) {
        rep.distinguished = true;
        rep.wi = i;
        rep.wj = j;
      }
    }
  }
  return rep;
}

}  // namespace linkkit
