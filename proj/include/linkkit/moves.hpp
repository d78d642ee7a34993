#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkkit/diagram.hpp"

namespace linkkit {

// one pass of a strand through a crossing
struct Visit {
  int crossing = 0;
  bool under = false;
  bool operator==(const Visit&) const = default;
};

// a diagram as per-component visit sequences plus crossing signs; an empty
// sequence is a crossing-free circle
struct VisitLists {
  std::vector<std::vector<Visit>> comps;
  std::vector<int> sign;
  int free_circles = 0;
};

VisitLists to_visits(const LinkDiagram& d);
LinkDiagram from_visits(const VisitLists& v);

// detect-and-apply, first match in scan order; desc gets a short description
std::optional<LinkDiagram> r1_remove(const LinkDiagram& d, std::string* desc = nullptr);
std::optional<LinkDiagram> r2_remove(const LinkDiagram& d, std::string* desc = nullptr);
std::vector<LinkDiagram> r3_neighbors(const LinkDiagram& d);

LinkDiagram r1_add(const LinkDiagram& d, int arc, int sign);
LinkDiagram r2_add(const LinkDiagram& d, int over_arc, int under_arc);
LinkDiagram r3_slide(const LinkDiagram& d, int which);

struct SimplifyResult {
  LinkDiagram diagram;
  std::vector<std::string> log;
};

// greedy kink/bigon removal plus a bounded breadth-first search over triangle
// slides; budget caps the number of searched positions
SimplifyResult simplify(const LinkDiagram& d, int budget = 1000);

// random move sequence, reproducible from the seed; never exceeds crossing_cap
LinkDiagram scrambled(const LinkDiagram& d, std::uint64_t seed, int n_moves,
                      bool allow_r1 = true, int crossing_cap = 24);

}  // namespace linkkit
