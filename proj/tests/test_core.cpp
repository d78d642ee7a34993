#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "linkkit/diagram.hpp"

using namespace linkkit;

namespace {

LinkDiagram trefoil() {
  return make_diagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}});
}

LinkDiagram hopf() { return make_diagram({{1, 4, 2, 3}, {4, 1, 3, 2}}); }

std::set<std::vector<int>> face_sets(const FaceData& f) {
  std::set<std::vector<int>> out;
  for (const auto& fa : f.face_arcs) {
    std::vector<int> v = fa;
    std::sort(v.begin(), v.end());
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("trefoil basics") {
  LinkDiagram d = trefoil();
  CHECK(d.arc_count == 6);
  CHECK(d.n_components == 1);
  CHECK(writhe(d) == 3);
  for (const auto& c : d.crossings) CHECK(c.sign == 1);
  CHECK(d.comp_of(1) == 1);
  CHECK(d.comp_of(6) == 1);
  auto cyc = component_cycles(d);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(successor_arc(d, 6) == 1);
  validate(d);
}

TEST_CASE("positive kink resolves by propagation") {
  LinkDiagram d = make_diagram({{1, 1, 2, 2}});
  CHECK(d.crossings[0].sign == 1);
  CHECK(writhe(d) == 1);
  CHECK(d.n_components == 1);
}

TEST_CASE("hopf signs and components") {
  LinkDiagram d = hopf();
  CHECK(d.n_components == 2);
  CHECK(d.crossings[0].sign == 1);
  CHECK(d.crossings[1].sign == 1);
  CHECK(d.comp_of(2) == 1);
  CHECK(d.comp_of(3) == 2);
  CHECK(self_writhe(d, 1) == 0);
}

TEST_CASE("validation failures") {
  CHECK_THROWS_AS(make_diagram({{1, 1, 1, 2}}), ArcMultiplicity);
  CHECK_THROWS_AS(make_diagram({{1, 2, 3, 4}}), ArcMultiplicity);
  CHECK_THROWS_AS(make_diagram({{1, 2, 3, 4}, {1, 4, 3, 2}}), InconsistentOrientation);
  // trefoil with labels 2 and 6 exchanged: labels stop increasing along the walk
  CHECK_THROWS_AS(make_diagram({{1, 5, 6, 4}, {3, 1, 4, 2}, {5, 3, 2, 6}}),
                  InconsistentOrientation);
  CHECK_THROWS_AS(make_diagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, 2),
                  ComponentMismatch);
  CHECK_THROWS_AS(make_diagram({}, 1, 0), ComponentMismatch);
  CHECK_NOTHROW(make_diagram({}, 1, 1));
}

TEST_CASE("trefoil faces") {
  LinkDiagram d = trefoil();
  FaceData f = trace_faces(d);
  CHECK(f.n_faces == 5);
  CHECK(f.n_parts == 1);
  std::set<std::vector<int>> expect = {
      {1, 3, 5}, {1, 4}, {2, 5}, {3, 6}, {2, 4, 6}};
  CHECK(face_sets(f) == expect);
  std::vector<int> inf = f.face_arcs[size_t(f.infinity_face)];
  std::sort(inf.begin(), inf.end());
  CHECK(inf == std::vector<int>{1, 4});
  // every arc is walked exactly twice, once per side
  size_t total = 0;
  for (const auto& fa : f.face_arcs) total += fa.size();
  CHECK(total == 2 * size_t(d.arc_count));
  for (int e = 1; e <= d.arc_count; ++e) {
    CHECK(f.right_face[size_t(e)] >= 0);
    CHECK(f.left_face[size_t(e)] >= 0);
    CHECK(f.right_face[size_t(e)] != f.left_face[size_t(e)]);
  }
}

TEST_CASE("hopf faces satisfy the euler count") {
  FaceData f = trace_faces(hopf());
  CHECK(f.n_faces == 4);
  CHECK(f.n_parts == 1);
}

TEST_CASE("split diagram gets per-part outer faces") {
  // two disjoint kinks
  LinkDiagram d = make_diagram({{1, 1, 2, 2}, {3, 3, 4, 4}});
  FaceData f = trace_faces(d);
  CHECK(f.n_parts == 2);
  CHECK(f.n_faces == 2 + 2 * 2);
  CHECK(f.outer_face_of_part[0] != f.outer_face_of_part[1]);
  CHECK(f.infinity_face == f.outer_face_of_part[0]);
}

TEST_CASE("mirror flips every sign") {
  LinkDiagram d = trefoil();
  LinkDiagram m = mirror(d);
  CHECK(writhe(m) == -3);
  validate(m);
  CHECK(mirror(m) == d);
}

TEST_CASE("sublink of a hopf component is a bare circle") {
  std::vector<int> image;
  LinkDiagram s = sublink(hopf(), {1}, &image);
  CHECK(s.crossings.empty());
  CHECK(s.n_components == 1);
  CHECK(s.unknotted_free_components == 1);
  CHECK(image == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("sublink keeps a self-crossing component intact") {
  LinkDiagram d = make_diagram({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, -1, 1);
  CHECK(d.n_components == 2);
  LinkDiagram s1 = sublink(d, {1});
  CHECK(s1.crossings.size() == 3);
  CHECK(s1.unknotted_free_components == 0);
  CHECK(canonical_key(s1) == canonical_key(trefoil()));
  LinkDiagram s2 = sublink(d, {2});
  CHECK(s2.crossings.empty());
  CHECK(s2.n_components == 1);
  CHECK_THROWS_AS(sublink(d, {}), BadSelector);
  CHECK_THROWS_AS(sublink(d, {3}), BadSelector);
  CHECK_THROWS_AS(sublink(d, {1, 1}), BadSelector);
}

TEST_CASE("canonical key ignores label rotation") {
  LinkDiagram a = trefoil();
  LinkDiagram b = make_diagram({{2, 6, 3, 5}, {4, 2, 5, 1}, {6, 4, 1, 3}});
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(mirror(a)));
}
