#pragma once
#include <string>
#include <vector>

#include "linkkit/bigint.hpp"
#include "linkkit/diagram.hpp"
#include "linkkit/matrix.hpp"

namespace linkkit {

// Checkerboard data for the chosen surface component: the reduced Goeritz
// matrix over the bounded white regions of that component's own diagram, and
// for every other component the vector of its linkings with the white-region
// boundary curves.
struct GoeritzData {
  int surface_component = 0;
  int n_components = 0;
  std::vector<int> white_basis;               // bounded white face ids (sub-diagram)
  IntMatrix goeritz;                          // reduced Goeritz matrix
  std::vector<std::vector<BigInt>> vectors;   // [comp-1] -> V(K_comp); empty at surface
};

// Exact rational residue, reduced to [0,1), with the sign-free comparison key.
struct ResidueMod1 {
  BigRat r;  // representative in [0,1)
  BigRat u;  // min(r, 1-r)
};

GoeritzData checkerboard(const LinkDiagram& d, int surface_component);
ResidueMod1 lambda(const GoeritzData& data, int i, int j);

std::string lambda_line(int i, int j, const ResidueMod1& v);

struct LambdaReport {
  bool distinguished = false;
  int wi = 0, wj = 0;                 // witnessing pair when distinguished
  std::vector<std::string> lines_a;   // per-pair reports, first link
  std::vector<std::string> lines_b;   // per-pair reports, second link
};

LambdaReport lambda_compare(const LinkDiagram& a, const LinkDiagram& b,
                            int surface_component);

}  // namespace linkkit
