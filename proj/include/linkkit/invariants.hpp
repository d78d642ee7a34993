#pragma once
#include "linkkit/diagram.hpp"
#include "linkkit/laurent.hpp"
#include "linkkit/matrix.hpp"

namespace linkkit {

inline constexpr int kBracketCrossingLimit = 24;

// half the signed count of crossings between two distinct components
int linking_number(const LinkDiagram& d, int i, int j);

// symmetric matrix of pairwise linking numbers, zero diagonal
IntMatrix linking_matrix(const LinkDiagram& d);

// State sum in the variable A, normalized so the 0-crossing unknot gives 1
// and each extra loop contributes a factor -A^2 - A^-2.
Laurent kauffman_bracket(const LinkDiagram& d);

// Writhe-corrected bracket (-A)^{-3w} * <D>. Exponents are kept in quarter
// powers of t, so callers print with to_string("t", 4).
Laurent jones(const LinkDiagram& d);

}  // namespace linkkit
