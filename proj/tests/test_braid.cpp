#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "linkkit/braid.hpp"
#include "linkkit/codec.hpp"

using namespace linkkit;

TEST_CASE("word algebra") {
  BraidWord w = parse_braid("strands=3\ns1 s2^-1\n");
  BraidWord wi = inverse(w);
  REQUIRE(wi.gens.size() == 2);
  CHECK(wi.gens[0] == BraidGen{2, false});
  CHECK(wi.gens[1] == BraidGen{1, true});
  CHECK(concat(w, wi).gens.size() == 4);
  CHECK(power(w, -2) == concat(wi, wi));
  CHECK_THROWS_AS(concat(w, parse_braid("strands=2\ns1\n")), BadParams);
}

TEST_CASE("permutations and purity") {
  BraidWord w = parse_braid("strands=3\ns1 s2 s1\n");
  auto p = strand_permutation(w);
  CHECK(p[1] == 3);
  CHECK(p[2] == 2);
  CHECK(p[3] == 1);
  CHECK(!is_pure(w));
  CHECK(is_pure(parse_braid("strands=3\ns1 s1\n")));
  CHECK(is_pure(band_generator(4, 2, 4)));
  CHECK(is_pure(clasper_word(3, 2, {1, 2, 3})));
}

TEST_CASE("band generator word") {
  BraidWord a13 = band_generator(3, 1, 3);
  BraidWord expect = parse_braid("strands=3\ns2 s1 s1 s2^-1\n");
  CHECK(a13 == expect);
  CHECK(band_generator(2, 1, 2) == parse_braid("strands=2\ns1 s1\n"));
  CHECK_THROWS_AS(band_generator(3, 2, 2), RangeError);
  CHECK_THROWS_AS(band_generator(3, 0, 2), RangeError);
  CHECK_THROWS_AS(band_generator(3, 1, 4), RangeError);
}

TEST_CASE("clasper words are nested commutators") {
  BraidWord w = clasper_word(3, 2, {3, 1, 2});  // order does not matter
  BraidWord a = band_generator(3, 1, 2), b = band_generator(3, 1, 3);
  CHECK(w == commutator(a, b));
  CHECK(w.gens.size() == 12);  // bands of 2, 4, 2, 4 letters
  CHECK(clasper_word(4, 1, {2, 4}) == band_generator(4, 2, 4));
  CHECK_THROWS_AS(clasper_word(3, 2, {1, 2}), IndexError);
  CHECK_THROWS_AS(clasper_word(3, 2, {1, 2, 2}), IndexError);
  CHECK_THROWS_AS(clasper_word(3, 2, {1, 2, 4}), IndexError);
  CHECK_THROWS_AS(clasper_word(3, 0, {1}), IndexError);
}

TEST_CASE("insertion splices a power of the word") {
  BraidWord host = parse_braid("strands=3\ns1 s1 s1\n");
  BraidWord ins = parse_braid("strands=3\ns2\n");
  BraidWord got = insert_at(host, 1, ins, -1);
  CHECK(got == parse_braid("strands=3\ns1 s2^-1 s1 s1\n"));
  CHECK_THROWS_AS(insert_at(host, 4, ins, 1), BadParams);
  CHECK_THROWS_AS(insert_at(host, 1, ins, 2), BadParams);
}

TEST_CASE("closure of one letter is a kink") {
  LinkDiagram d = closure(parse_braid("strands=2\ns1\n"));
  REQUIRE(d.crossings.size() == 1);
  CHECK(d.crossings[0].a == std::array<int, 4>{1, 1, 2, 2});
  CHECK(d.crossings[0].sign == 1);
  CHECK(d.n_components == 1);
}

TEST_CASE("closure of s1 squared is the hopf link") {
  LinkDiagram d = closure(parse_braid("strands=2\ns1 s1\n"));
  REQUIRE(d.crossings.size() == 2);
  CHECK(d.crossings[0].a == std::array<int, 4>{1, 4, 2, 3});
  CHECK(d.crossings[1].a == std::array<int, 4>{4, 1, 3, 2});
  CHECK(d.n_components == 2);
}

TEST_CASE("closure of s1 cubed is the trefoil") {
  LinkDiagram d = closure(parse_braid("strands=2\ns1 s1 s1\n"));
  LinkDiagram t = make_diagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}});
  CHECK(canonical_key(d) == canonical_key(t));
}

TEST_CASE("closure keeps idle strands as circles") {
  LinkDiagram d = closure(parse_braid("strands=4\ns1 s1\n"));
  CHECK(d.n_components == 4);
  CHECK(d.unknotted_free_components == 2);
}

TEST_CASE("borromean closure") {
  LinkDiagram d = closure(clasper_word(3, 2, {1, 2, 3}));
  CHECK(d.n_components == 3);
  CHECK(d.crossings.size() == 12);
  CHECK(writhe(d) == 0);
}

TEST_CASE("paired words for sliding, crossing and rotation") {
  BraidWord w1 = clasper_word(3, 1, {1, 2});
  BraidWord w2 = clasper_word(3, 2, {1, 2, 3});
  auto [a, b] = leaf_slide_pair(w1, 1, w2, 2);
  CHECK(a.gens.size() == w1.gens.size() + w2.gens.size());
  CHECK(b.gens.size() == w1.gens.size() + 3 * w2.gens.size());
  CHECK(is_pure(a));
  CHECK(is_pure(b));
  CHECK_THROWS_AS(leaf_slide_pair(w1, 2, w2, 2), BadParams);

  auto [c, e] = edge_cross_pair(w1, 1, 3, -1);
  CHECK(c == w1);
  CHECK(e.gens.size() == w1.gens.size() + 2 * band_generator(3, 1, 3).gens.size());
  CHECK(is_pure(e));

  auto [f, g] = index_decomp_pair(w2, 5);
  CHECK(f == w2);
  CHECK(g.gens.size() == w2.gens.size());
  CHECK(g.gens[0] == w2.gens[5]);
  CHECK(is_pure(g));
}
