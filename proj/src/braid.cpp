#include "linkkit/braid.hpp"

#include <algorithm>

#include "linkkit/moves.hpp"

namespace linkkit {

BraidWord concat(const BraidWord& x, const BraidWord& y) {
  if (x.strands != y.strands) throw BadParams("cannot concatenate words on different strand counts");
  BraidWord r = x;
  r.gens.insert(r.gens.end(), y.gens.begin(), y.gens.end());
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.gens.reserve(w.gens.size());
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
    r.gens.push_back({it->index, !it->inverse});
  return r;
}

BraidWord power(const BraidWord& w, int e) {
  BraidWord base = e < 0 ? inverse(w) : w;
  int n = e < 0 ? -e : e;
  BraidWord r;
  r.strands = w.strands;
  for (int i = 0; i < n; ++i) r.gens.insert(r.gens.end(), base.gens.begin(), base.gens.end());
  return r;
}

std::vector<int> strand_permutation(const BraidWord& w) {
  std::vector<int> occupant(size_t(w.strands) + 1);
  for (int p = 1; p <= w.strands; ++p) occupant[size_t(p)] = p;
  for (const auto& g : w.gens) {
    if (g.index < 1 || g.index >= w.strands)
      throw RangeError("generator index " + std::to_string(g.index) + " out of range");
    std::swap(occupant[size_t(g.index)], occupant[size_t(g.index) + 1]);
  }
  std::vector<int> perm(size_t(w.strands) + 1, 0);
  for (int p = 1; p <= w.strands; ++p) perm[size_t(occupant[size_t(p)])] = p;
  return perm;
}

bool is_pure(const BraidWord& w) {
  auto perm = strand_permutation(w);
  for (int i = 1; i <= w.strands; ++i)
    if (perm[size_t(i)] != i) return false;
  return true;
}

BraidWord band_generator(int strands, int i, int j) {
  if (!(1 <= i && i < j && j <= strands))
    throw RangeError("band A(" + std::to_string(i) + "," + std::to_string(j) +
                     ") needs 1 <= i < j <= " + std::to_string(strands));
  BraidWord w;
  w.strands = strands;
  for (int t = j - 1; t > i; --t) w.gens.push_back({t, false});
  w.gens.push_back({i, false});
  w.gens.push_back({i, false});
  for (int t = i + 1; t <= j - 1; ++t) w.gens.push_back({t, true});
  return w;
}

BraidWord commutator(const BraidWord& x, const BraidWord& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

BraidWord clasper_word(int strands, int k, const std::vector<int>& indices) {
  if (k < 1) throw IndexError("degree must be at least 1");
  if (int(indices.size()) != k + 1)
    throw IndexError("degree " + std::to_string(k) + " needs exactly " +
                     std::to_string(k + 1) + " strand indices");
  std::vector<int> s = indices;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw IndexError("strand indices must be distinct");
  if (s.front() < 1 || s.back() > strands)
    throw IndexError("strand indices must lie in 1.." + std::to_string(strands));
  BraidWord w = band_generator(strands, s[0], s[size_t(k)]);
  for (int t = k - 1; t >= 1; --t)
    w = commutator(band_generator(strands, s[0], s[size_t(t)]), w);
  return w;
}

BraidWord insert_at(const BraidWord& host, int pos, const BraidWord& ins, int eta) {
  if (host.strands != ins.strands) throw BadParams("strand counts differ");
  if (pos < 0 || pos > int(host.gens.size()))
    throw BadParams("insertion position out of range");
  if (eta != 1 && eta != -1) throw BadParams("exponent must be +1 or -1");
  BraidWord body = eta < 0 ? inverse(ins) : ins;
  BraidWord r;
  r.strands = host.strands;
  r.gens.assign(host.gens.begin(), host.gens.begin() + pos);
  r.gens.insert(r.gens.end(), body.gens.begin(), body.gens.end());
  r.gens.insert(r.gens.end(), host.gens.begin() + pos, host.gens.end());
  return r;
}

LinkDiagram closure(const BraidWord& w) {
  if (w.strands < 1) throw BadParams("braid needs at least one strand");
  std::vector<int> occupant(size_t(w.strands) + 1);
  for (int p = 1; p <= w.strands; ++p) occupant[size_t(p)] = p;
  std::vector<std::vector<Visit>> strand_visits(size_t(w.strands) + 1);
  VisitLists v;
  v.sign.reserve(w.gens.size());
  for (int t = 0; t < int(w.gens.size()); ++t) {
    const auto& g = w.gens[size_t(t)];
    if (g.index < 1 || g.index >= w.strands)
      throw RangeError("generator index " + std::to_string(g.index) + " out of range");
    int left = occupant[size_t(g.index)], right = occupant[size_t(g.index) + 1];
    // positive letter: the strand coming from the left dips under
    strand_visits[size_t(left)].push_back({t, !g.inverse});
    strand_visits[size_t(right)].push_back({t, g.inverse});
    v.sign.push_back(g.inverse ? -1 : +1);
    std::swap(occupant[size_t(g.index)], occupant[size_t(g.index) + 1]);
  }
  std::vector<int> end_pos(size_t(w.strands) + 1, 0);
  for (int p = 1; p <= w.strands; ++p) end_pos[size_t(occupant[size_t(p)])] = p;
  std::vector<char> used(size_t(w.strands) + 1, 0);
  for (int s = 1; s <= w.strands; ++s) {
    if (used[size_t(s)]) continue;
    std::vector<Visit> lst;
    int cur = s;
    do {
      used[size_t(cur)] = 1;
      lst.insert(lst.end(), strand_visits[size_t(cur)].begin(),
                 strand_visits[size_t(cur)].end());
      cur = end_pos[size_t(cur)];
    } while (cur != s);
    v.comps.push_back(std::move(lst));
  }
  return from_visits(v);
}

std::pair<BraidWord, BraidWord> leaf_slide_pair(const BraidWord& w1, int j,
                                                const BraidWord& w2, int k) {
  if (j == k) throw BadParams("the two degrees must differ");
  if (w1.strands != w2.strands) throw BadParams("strand counts differ");
  BraidWord first = concat(w1, w2);
  BraidWord second = concat(concat(concat(w2, w1), inverse(w2)), w2);
  return {first, second};
}

std::pair<BraidWord, BraidWord> edge_cross_pair(const BraidWord& w, int a, int b, int eta) {
  if (eta != 1 && eta != -1) throw BadParams("exponent must be +1 or -1");
  BraidWord band = band_generator(w.strands, a, b);
  if (eta < 0) band = inverse(band);
  BraidWord second = concat(concat(band, w), inverse(band));
  return {w, second};
}

std::pair<BraidWord, BraidWord> index_decomp_pair(const BraidWord& w, int rot) {
  BraidWord second;
  second.strands = w.strands;
  if (!w.gens.empty()) {
    int m = int(w.gens.size());
    int r = ((rot % m) + m) % m;
    second.gens.assign(w.gens.begin() + r, w.gens.end());
    second.gens.insert(second.gens.end(), w.gens.begin(), w.gens.begin() + r);
  }
  return {w, second};
}

}  // namespace linkkit
