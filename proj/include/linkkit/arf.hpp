#pragma once
#include "linkkit/diagram.hpp"

namespace linkkit {

// Arf invariant of a knot: the mod-2 quadratic form q(x) = x^T V x on H_1 of
// the Seifert surface (V the Seifert pairing) has symplectic mod-2 polar form
// (V+V^T); summing q(a_i)q(b_i) over a symplectic basis gives Arf.
int arf_knot(const LinkDiagram& d);

// Robertello's Arf invariant of a proper link (each component has even total
// linking with the rest): fuse the components into a knot with
// orientation-respecting planar bands, then take arf_knot. Well-defined for
// proper links by Robertello's theorem; band_choice picks among admissible
// band attachments (mixed radix across the successive fusions) so tests can
// confirm the choice does not matter.
int arf_link(const LinkDiagram& d, int band_choice = 0);

// The banded-fusion knot diagram arf_link evaluates: crossing-free circles
// are absorbed outright, then the two lowest-numbered components are joined
// through a shared face (outer region preferred, first admissible arc pair in
// serialization order) until one component remains.
LinkDiagram fuse_to_knot(const LinkDiagram& d, int band_choice = 0);

}  // namespace linkkit
