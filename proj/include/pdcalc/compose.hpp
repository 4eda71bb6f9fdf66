#pragma once

#include "pdcalc/diagram.hpp"

namespace pdcalc {

// Stacks `top` (m -> k) on `bottom` (n -> m), giving an n -> k diagram.
// Through-arcs are traced by alternating the two involutions across the m
// glued points. Closed curves born at the middle line become loops, nested by
// gluing faces across the m+1 middle-line intervals with a union-find; each
// loop is deposited, together with the contents of its interior faces, into
// the result region it floats in. Purely combinatorial.
DecoratedDiagram compose(const DecoratedDiagram& top, const DecoratedDiagram& bottom);

// Closes a disk diagram on 2k points by a decorated outer diagram on 2k
// points. Loops are the cycles of the two involutions; faces are glued across
// the 2k boundary segments; the face-loop incidence tree is rooted at the
// outer diagram's infinity face.
NestedClosure glue_disk_outer(const DecoratedDiagram& x, const DecoratedOuter& y);

// Underlying matching, total circle count, and the stripped region contents.
struct ArcDecomposition {
    Matching matching;
    int circle_count = 0;
    std::map<int, Contents> regions; // contents with forms/loops removed
};
ArcDecomposition arc_decompose(const DecoratedDiagram& d);

// For a diagram whose every region carries exactly one basis-element label:
// segment i inherits the label of its region; returns the 2k labels (0-based
// basis indices) for segments 1..2k.
std::vector<int> boundary_sequence(const DecoratedDiagram& d);

} // namespace pdcalc
