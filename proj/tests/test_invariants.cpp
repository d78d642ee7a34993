#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "linkkit/braid.hpp"
#include "linkkit/codec.hpp"
#include "linkkit/invariants.hpp"
#include "linkkit/moves.hpp"

using namespace linkkit;

namespace {

std::string slurp(const std::string& name) {
  const char* dir = std::getenv("LINKKIT_DATA_DIR");
  REQUIRE(dir != nullptr);
  std::ifstream in(std::string(dir) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BraidWord word(int strands, const std::string& text) {
  return parse_braid("strands=" + std::to_string(strands) + "\n" + text + "\n");
}

Laurent mono(long long e, long long c) { return Laurent::mono(e, BigInt(c)); }

}  // namespace

TEST_CASE("linking numbers") {
  LinkDiagram hopf = parse_pd(slurp("hopf.pd"));
  CHECK(linking_number(hopf, 1, 2) == 1);
  CHECK(linking_number(hopf, 2, 1) == 1);
  CHECK_THROWS_AS(linking_number(hopf, 1, 1), BadSelector);
  CHECK_THROWS_AS(linking_number(hopf, 0, 2), BadSelector);
  CHECK_THROWS_AS(linking_number(hopf, 1, 3), BadSelector);

  LinkDiagram un2 = parse_pd(slurp("unlink2.pd"));
  CHECK(linking_number(un2, 1, 2) == 0);

  IntMatrix lm = linking_matrix(hopf);
  CHECK(lm.at(0, 0) == 0);
  CHECK(lm.at(0, 1) == 1);
  CHECK(lm.at(1, 0) == 1);
  CHECK(lm.at(1, 1) == 0);
}

TEST_CASE("borromean rings have a zero linking matrix") {
  BraidWord b = clasper_word(3, 2, {1, 2, 3});
  LinkDiagram d = closure(b);
  CHECK(d.n_components == 3);
  CHECK(linking_matrix(d).is_zero());
}

TEST_CASE("bracket on small pinned diagrams") {
  LinkDiagram unknot = make_diagram({}, -1, 1);
  CHECK(kauffman_bracket(unknot) == Laurent::one());

  LinkDiagram un2 = parse_pd(slurp("unlink2.pd"));
  CHECK(kauffman_bracket(un2) == mono(2, -1) + mono(-2, -1));

  LinkDiagram kink = closure(word(2, "s1"));
  CHECK(kauffman_bracket(kink) == mono(3, -1));

  LinkDiagram hopf = parse_pd(slurp("hopf.pd"));
  CHECK(kauffman_bracket(hopf) == mono(4, -1) + mono(-4, -1));

  LinkDiagram trefoil = parse_pd(slurp("trefoil.pd"));
  CHECK(kauffman_bracket(trefoil) == mono(5, -1) + mono(-3, -1) + mono(-7, 1));
}

TEST_CASE("bracket refuses oversized diagrams") {
  std::string long_word;
  for (int i = 0; i < 25; ++i) long_word += "s1 ";
  LinkDiagram d = closure(word(2, long_word));
  CHECK(d.crossings.size() == 25);
  CHECK_THROWS_AS(kauffman_bracket(d), TooLarge);
}

TEST_CASE("jones on pinned examples") {
  LinkDiagram unknot = make_diagram({}, -1, 1);
  CHECK(jones(unknot) == Laurent::one());

  // one positive kink: the writhe factor cancels the curl
  LinkDiagram kink = closure(word(2, "s1"));
  CHECK(jones(kink) == Laurent::one());

  LinkDiagram trefoil = parse_pd(slurp("trefoil.pd"));
  Laurent v = jones(trefoil);
  CHECK(v == mono(-16, -1) + mono(-12, 1) + mono(-4, 1));
  CHECK(v.to_string("t", 4) == "-1*t^-4 + 1*t^-3 + 1*t^-1");

  LinkDiagram hopf = parse_pd(slurp("hopf.pd"));
  CHECK(jones(hopf) == mono(-10, -1) + mono(-2, -1));
}

TEST_CASE("bracket is invariant under planar moves that keep writhe structure") {
  LinkDiagram trefoil = parse_pd(slurp("trefoil.pd"));
  Laurent b0 = kauffman_bracket(trefoil);
  for (unsigned seed = 1; seed <= 6; ++seed) {
    LinkDiagram s = scrambled(trefoil, seed, 40, /*allow_r1=*/false, 16);
    CHECK(kauffman_bracket(s) == b0);
  }
}

TEST_CASE("jones is invariant under all moves") {
  LinkDiagram hopf = parse_pd(slurp("hopf.pd"));
  Laurent v0 = jones(hopf);
  for (unsigned seed = 1; seed <= 6; ++seed) {
    LinkDiagram s = scrambled(hopf, seed, 40, /*allow_r1=*/true, 16);
    CHECK(jones(s) == v0);
  }
  LinkDiagram borromean = closure(clasper_word(3, 2, {1, 2, 3}));
  Laurent vb = jones(borromean);
  LinkDiagram sb = scrambled(borromean, 7, 12, true, 16);
  CHECK(jones(sb) == vb);
}
