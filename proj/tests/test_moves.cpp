#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "linkkit/braid.hpp"
#include "linkkit/codec.hpp"
#include "linkkit/moves.hpp"

using namespace linkkit;

namespace {

LinkDiagram trefoil() {
  return make_diagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}});
}

BraidWord word(const std::string& t) { return parse_braid(t); }

}  // namespace

TEST_CASE("visit lists round trip") {
  for (const LinkDiagram& d :
       {trefoil(), make_diagram({{1, 4, 2, 3}, {4, 1, 3, 2}}),
        make_diagram({{2, 6, 3, 5}, {4, 2, 5, 1}, {6, 4, 1, 3}}, -1, 2)}) {
    LinkDiagram r = from_visits(to_visits(d));
    CHECK(r == renumbered(d));
  }
}

TEST_CASE("kink add and remove are inverse") {
  LinkDiagram d = trefoil();
  for (int sign : {1, -1}) {
    for (int arc = 1; arc <= d.arc_count; ++arc) {
      LinkDiagram k = r1_add(d, arc, sign);
      CHECK(k.crossings.size() == 4);
      CHECK(writhe(k) == 3 + sign);
      std::string desc;
      auto back = r1_remove(k, &desc);
      REQUIRE(back.has_value());
      CHECK(canonical_key(*back) == canonical_key(d));
      CHECK(desc.substr(0, 2) == "R1");
    }
  }
  CHECK(!r1_remove(d).has_value());
}

TEST_CASE("kink removal can empty a component") {
  LinkDiagram k = make_diagram({{1, 1, 2, 2}});
  auto r = r1_remove(k);
  REQUIRE(r.has_value());
  CHECK(r->crossings.empty());
  CHECK(r->n_components == 1);
  CHECK(r->unknotted_free_components == 1);
}

TEST_CASE("poke add and remove are inverse") {
  LinkDiagram d = make_diagram({{1, 4, 2, 3}, {4, 1, 3, 2}});
  FaceData f = trace_faces(d);
  int pokes = 0;
  for (int fid = 0; fid < f.n_faces; ++fid) {
    const auto& arcs = f.face_arcs[size_t(fid)];
    for (int e : arcs)
      for (int g : arcs) {
        if (e == g) continue;
        LinkDiagram p = r2_add(d, e, g);
        ++pokes;
        CHECK(p.crossings.size() == 4);
        CHECK(p.n_components == 2);
        CHECK(writhe(p) == writhe(d));
        auto back = r2_remove(p);
        REQUIRE(back.has_value());
        CHECK(canonical_key(*back) == canonical_key(d));
      }
  }
  CHECK(pokes > 0);
  CHECK(!r2_remove(d).has_value());
  CHECK_THROWS_AS(r2_add(d, 1, 1), BadParams);
}

TEST_CASE("triangle slide preserves the braid relation") {
  LinkDiagram a = closure(word("strands=3\ns1 s2 s1\n"));
  LinkDiagram b = closure(word("strands=3\ns2 s1 s2\n"));
  auto ns = r3_neighbors(a);
  REQUIRE(!ns.empty());
  bool hit = false;
  for (const auto& n : ns) {
    CHECK(n.crossings.size() == 3);
    CHECK(writhe(n) == writhe(a));
    if (canonical_key(n) == canonical_key(b)) hit = true;
  }
  CHECK(hit);
  CHECK_THROWS_AS(r3_slide(a, -1), BadParams);
}

TEST_CASE("simplify removes poke chains") {
  LinkDiagram d = closure(word("strands=3\ns1 s1^-1 s2 s2^-1\n"));
  SimplifyResult s = simplify(d);
  CHECK(s.diagram.crossings.empty());
  CHECK(s.diagram.n_components == 3);
  CHECK(!s.log.empty());
}

TEST_CASE("simplify needs a triangle slide for hidden bigons") {
  // no kink or bigon exists until the triangle is slid
  LinkDiagram d = closure(word("strands=3\ns1 s2 s1 s2^-1 s1^-1 s2^-1\n"));
  CHECK(!r1_remove(d).has_value());
  CHECK(!r2_remove(d).has_value());
  SimplifyResult s = simplify(d);
  CHECK(s.diagram.crossings.empty());
  CHECK(s.diagram.n_components == 3);
}

TEST_CASE("whitehead diagram does not simplify away") {
  LinkDiagram d = closure(word("strands=3\ns1 s2^-1 s1 s2^-1 s1\n"));
  CHECK(d.n_components == 2);
  SimplifyResult s = simplify(d);
  CHECK(s.diagram.crossings.size() == 5);
}

TEST_CASE("scramble is reproducible and bounded") {
  LinkDiagram d = trefoil();
  LinkDiagram a = scrambled(d, 99, 40);
  LinkDiagram b = scrambled(d, 99, 40);
  CHECK(a == b);
  CHECK(a.crossings.size() <= 24);
  CHECK(a.n_components == 1);
  LinkDiagram c = scrambled(d, 7, 40, false, 16);
  CHECK(c.crossings.size() <= 16);
  CHECK(writhe(c) == writhe(d));  // no kinks allowed, writhe is preserved
}
