#pragma once
#include "linkkit/diagram.hpp"
#include "linkkit/matrix.hpp"

namespace linkkit {

// Seifert pairing V[a][b] = lk(e_a, e_b^+) for the surface obtained by
// smoothing every crossing coherently: one disk per Seifert circle, one
// half-twisted band per crossing. Basis loops are the non-tree crossings of
// the circle graph (spanning tree grown from the circle through arc 1, edges
// scanned in crossing order), listed by increasing crossing index, so the
// matrix has rank = crossings - circles + 1.
//
// Requires a connected diagram: split shadows and crossing-free circles other
// than the trivial 0-crossing unknot throw Disconnected.
IntMatrix seifert_matrix(const LinkDiagram& d);

namespace detail {
// Sign conventions of the concrete embedding (disk co-orientation, the
// crossing two passages of one band make, a passage's own-core framing).
// The defaults are calibrated against explicit geometric realizations of the
// surface; flipping them yields mirrored or transposed pairings. The hook
// exists so tests can show the alternatives break known invariants.
struct SeifertConventions {
  int nu_anchor = -1;  // co-orientation of ccw disks
  int band_pass = -1;  // sign of the one crossing two passes of a band make
  int band_self = -1;  // sign a band passage contributes on the diagonal
};
IntMatrix seifert_matrix_tuned(const LinkDiagram& d, const SeifertConventions& c);
}  // namespace detail

}  // namespace linkkit
