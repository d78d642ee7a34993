#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "linkkit/codec.hpp"

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

}  // namespace

TEST_CASE("pd round trip") {
  LinkDiagram d = parse_pd(slurp("trefoil.pd"));
  CHECK(d.n_components == 1);
  CHECK(d.crossings.size() == 3);
  std::string text = serialize_pd(d);
  CHECK(text ==
        "components=1 unknots=0\n"
        "X(1,5,2,4)\n"
        "X(3,1,4,6)\n"
        "X(5,3,6,2)\n");
  CHECK(parse_pd(text) == d);
}

TEST_CASE("pd parses comments, whitespace and headers") {
  LinkDiagram d = parse_pd("# a kink\ncomponents=1\nX( 1 , 1 ,2,2) # loop\n");
  CHECK(d.crossings.size() == 1);
  CHECK(d.n_components == 1);
  LinkDiagram u = parse_pd("components=3 unknots=3\n# nothing else\n");
  CHECK(u.n_components == 3);
  CHECK(u.crossings.empty());
}

TEST_CASE("pd error reporting") {
  CHECK_THROWS_AS(parse_pd("X(1,2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2) foo=3\n"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(0,1,2,2)\n"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("components=1 components=1\nX(1,1,2,2)\n"), SemanticError);
  CHECK_THROWS_AS(parse_pd("unknots=-1\n"), SemanticError);
  CHECK_THROWS_AS(parse_pd("components=2\nX(1,1,2,2)\n"), ComponentMismatch);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,3)\n"), ArcMultiplicity);
  try {
    parse_pd("components=1\nX(1,2]\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(e.kind() == std::string("SyntaxError"));
  }
}

TEST_CASE("fig7 links parse to three components") {
  LinkDiagram lp = parse_pd(slurp("fig7_Lprime.pd"));
  CHECK(lp.crossings.size() == 11);
  CHECK(lp.n_components == 3);
  LinkDiagram l = parse_pd(slurp("fig7_L.pd"));
  CHECK(l.crossings.size() == 15);
  CHECK(l.n_components == 3);
}

TEST_CASE("braid round trip") {
  BraidWord w = parse_braid("strands=3\ns1 s2^-1 s1 s2^-1 s1\n");
  CHECK(w.strands == 3);
  REQUIRE(w.gens.size() == 5);
  CHECK(w.gens[1] == BraidGen{2, true});
  CHECK(serialize_braid(w) == "strands=3\ns1 s2^-1 s1 s2^-1 s1\n");
  CHECK(parse_braid(serialize_braid(w)) == w);
}

TEST_CASE("braid band tokens expand") {
  BraidWord w = parse_braid("strands=3\nA(1,3)\n");
  CHECK(w == band_generator(3, 1, 3));
  BraidWord wi = parse_braid("strands=3\nA(1,3)^-1\n");
  CHECK(wi == inverse(band_generator(3, 1, 3)));
}

TEST_CASE("braid errors") {
  CHECK_THROWS_AS(parse_braid("s1 s2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_braid("strands=0\n"), RangeError);
  CHECK_THROWS_AS(parse_braid("strands=2\ns2\n"), RangeError);
  CHECK_THROWS_AS(parse_braid("strands=2\ns1^2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_braid("strands=3\nA(3,1)\n"), RangeError);
  CHECK_THROWS_AS(parse_braid("strands=3\nA(1,4)\n"), RangeError);
}
