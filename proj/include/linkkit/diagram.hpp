#pragma once
#include <array>
#include <string>
#include <vector>

#include "linkkit/errors.hpp"

namespace linkkit {

// One crossing of a planar diagram. The quadruple lists the four arc labels
// counterclockwise starting from the incoming under-strand, so slots sit
// geometrically at S, E, N, W with the under-strand running S -> N.
// sign = +1 means the over-strand runs W -> E (slot 3 in, slot 1 out).
struct Crossing {
  std::array<int, 4> a{};
  int sign = 0;

  int uin() const { return a[0]; }
  int uout() const { return a[2]; }
  int oin() const { return sign > 0 ? a[3] : a[1]; }
  int oout() const { return sign > 0 ? a[1] : a[3]; }
  int slot_oin() const { return sign > 0 ? 3 : 1; }
  int slot_oout() const { return sign > 0 ? 1 : 3; }

  bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 0;
  int n_components = 0;              // includes crossing-free circles
  int unknotted_free_components = 0; // crossing-free circles, labelled last
  std::vector<int> component_of_arc; // 1-based arc id -> component id

  int comp_of(int arc) const { return component_of_arc[size_t(arc)]; }
  bool operator==(const LinkDiagram&) const = default;
};

// Build from raw quadruples: infers crossing signs from the rule that arc
// labels increase along each component (with a single wrap), traces
// components, validates.
LinkDiagram make_diagram(const std::vector<std::array<int, 4>>& quads,
                         int declared_components = -1, int free_circles = 0);
void validate(const LinkDiagram& d);

int successor_arc(const LinkDiagram& d, int arc);
// arcs of each arc-bearing component, in traversal order from its least arc
std::vector<std::vector<int>> component_cycles(const LinkDiagram& d);

int writhe(const LinkDiagram& d);
int self_writhe(const LinkDiagram& d, int comp);

LinkDiagram mirror(const LinkDiagram& d);

// Sub-diagram spanned by the selected components (1-based, distinct).
// Crossings with deleted strands disappear; surviving strands are rewired
// through them. arc_image (optional) maps old arcs to new ones (0 = deleted).
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& sel,
                    std::vector<int>* arc_image = nullptr);

// Complementary faces of the 4-valent projection, traced with the face kept
// on the right of the walk. corner s of a crossing lies between slots s, s+1.
struct FaceData {
  std::vector<std::array<int, 4>> corner_face; // face id at each corner
  std::vector<std::vector<int>> face_arcs;     // arcs in orbit order (multiplicity)
  std::vector<int> right_face;                 // arc -> face on its right side
  std::vector<int> left_face;
  std::vector<int> shadow_part_of_crossing;    // connected shadow piece ids
  std::vector<int> outer_face_of_part;         // representative unbounded face per piece
  int n_parts = 0;
  int infinity_face = -1;                      // outer face of the whole diagram
  int n_faces = 0;
};
FaceData trace_faces(const LinkDiagram& d);

// canonical relabelling (components in order, each started at its least arc)
LinkDiagram renumbered(const LinkDiagram& d);
std::string canonical_key(const LinkDiagram& d);

}  // namespace linkkit
