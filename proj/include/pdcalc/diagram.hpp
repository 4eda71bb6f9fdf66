#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdcalc/circular_form.hpp"
#include "pdcalc/matching.hpp"
#include "pdcalc/scalar.hpp"

namespace pdcalc {

// Reference to an algebra element floating in a region: a basis vector index
// (0-based) or an explicit coordinate vector.
struct ElemRef {
    int basis = -1;
    std::vector<Scalar> coords;

    static ElemRef basis_elem(int i) { return ElemRef{i, {}}; }
    static ElemRef vector(std::vector<Scalar> v) { return ElemRef{-1, std::move(v)}; }
    bool is_basis() const { return basis >= 0; }
    std::string key() const;
    bool operator==(const ElemRef& o) const { return key() == o.key(); }
};

struct Loop;

// What floats in one region: a circular form (the product of all floating
// forms), algebra elements, and circles produced by composition that still
// wrap unevaluated contents. Multiplication is commutative, so everything is
// kept as an unordered multiset and only multiplied at evaluation time.
struct Contents {
    CircularForm form;
    std::vector<ElemRef> elems;
    std::vector<Loop> loops;

    bool is_trivial() const;
    void absorb(Contents other);      // union of two regions' contents
    void normalize();                 // collapse element-free loops into `form`, sort
    std::string key() const;          // canonical serialization for equality
    bool operator==(const Contents& o) const { return key() == o.key(); }
};

// A circle wrapped around contents, created when composition closes a curve.
struct Loop {
    Contents inside;
};

// A crossingless matching with contents in its regions (keyed by region
// index; absent regions are empty).
struct DecoratedDiagram {
    Matching matching;
    std::map<int, Contents> regions;

    static DecoratedDiagram plain(const Matching& m) { return DecoratedDiagram{m, {}}; }
    const Contents* region(int index) const;
    void add_form(int region, const CircularForm& u);
    void add_elem(int region, ElemRef e);
    void check_regions() const; // every key is a valid region index
    void normalize();
    std::string key() const;
    bool operator==(const DecoratedDiagram& o) const { return key() == o.key(); }
};

// An outer matching with contents in its annulus faces.
struct DecoratedOuter {
    OuterMatching outer;
    std::map<int, Contents> regions;

    static DecoratedOuter plain(const OuterMatching& m) { return DecoratedOuter{m, {}}; }
    void add_elem(int region, ElemRef e);
    void check_regions() const;
};

// A fully closed planar diagram: contents of the unbounded face plus the
// forest of loops hanging under it. Loops whose interiors hold no algebra
// elements collapse into root.form, so loops_created records how many closed
// curves the gluing produced before normalization.
struct NestedClosure {
    Contents root;
    int loops_created = 0;

    std::string key() const;
    bool operator==(const NestedClosure& o) const { return key() == o.key(); }
};

// Horizontal reflection (the bar involution): swaps the bottom and top
// boundary, reverses composition order, fixes every closed diagram.
Matching reflect(const Matching& m);
DecoratedDiagram reflect(const DecoratedDiagram& d);

// Cyclic relabeling i -> i+s (mod 2k) of a disk presentation; the marker
// moves along and region contents are carried to the relabeled faces.
Matching rotate(const Matching& m, int s);
DecoratedDiagram rotate(const DecoratedDiagram& d, int s);
OuterMatching rotate(const OuterMatching& m, int s);
DecoratedOuter rotate(const DecoratedOuter& d, int s);

// Horizontal (side by side) product; the rightmost region of d1 merges with
// the leftmost region of d2.
DecoratedDiagram tensor(const DecoratedDiagram& d1, const DecoratedDiagram& d2);

} // namespace pdcalc
