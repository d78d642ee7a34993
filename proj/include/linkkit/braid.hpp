#pragma once
#include <utility>
#include <vector>

#include "linkkit/diagram.hpp"

namespace linkkit {

// one Artin generator: sigma_{index} or its inverse, 1 <= index < strands
struct BraidGen {
  int index = 0;
  bool inverse = false;
  bool operator==(const BraidGen&) const = default;
};

struct BraidWord {
  int strands = 0;
  std::vector<BraidGen> gens;
  bool operator==(const BraidWord&) const = default;
};

BraidWord concat(const BraidWord& x, const BraidWord& y);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int e);

// perm[i] = position where the strand entering at i exits (1-based)
std::vector<int> strand_permutation(const BraidWord& w);
bool is_pure(const BraidWord& w);

// band generator A(i,j): strand j loops once around strand i, 1 <= i < j <= strands
BraidWord band_generator(int strands, int i, int j);

// [x, y] = x y x^-1 y^-1
BraidWord commutator(const BraidWord& x, const BraidWord& y);

// left-nested commutator [A(i1,i2), [A(i1,i3), [... A(i1,i_{k+1})]]] over the
// sorted index set; needs k >= 1 and k+1 distinct indices within the strand count
BraidWord clasper_word(int strands, int k, const std::vector<int>& indices);

// splice ins^eta (eta = +-1) into host before letter pos, 0 <= pos <= |host|
BraidWord insert_at(const BraidWord& host, int pos, const BraidWord& ins, int eta);

LinkDiagram closure(const BraidWord& w);

// pairs of words whose closures share all proper sublinks, built three ways:
// slide one factor around the other, conjugate by a band, or rotate the word
std::pair<BraidWord, BraidWord> leaf_slide_pair(const BraidWord& w1, int j,
                                                const BraidWord& w2, int k);
std::pair<BraidWord, BraidWord> edge_cross_pair(const BraidWord& w, int a, int b, int eta);
std::pair<BraidWord, BraidWord> index_decomp_pair(const BraidWord& w, int rot);

}  // namespace linkkit
