#pragma once

#include <utility>
#include <vector>

#include "pdcalc/errors.hpp"

namespace pdcalc {

// Crossingless matching of 2k points on the boundary of a disk, presented as a
// strip diagram with n_bottom + m_top = 2k.
//
// Conventions used throughout (all indices 1-based):
//   - bottom points 1..n left to right, top points n+1..2k right to left
//     (the disk boundary is read counterclockwise from the marker x);
//   - segment i is the boundary piece between points i and i+1 (cyclically);
//     segment 2k runs along the left edge and carries the marker;
//   - a region's index is the smallest segment it touches; a matching of 2k
//     points has exactly k+1 regions. The closed diagram (k = 0) has the
//     single region 1 touching no segment.
class Matching {
public:
    Matching() = default;
    static Matching from_arcs(int n_bottom, int m_top,
                              const std::vector<std::pair<int, int>>& arcs);

    int k() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }
    int n_bottom() const { return n_bottom_; }
    int m_top() const { return m_top_; }
    int partner(int p) const { return partner_[p - 1]; }

    // Same arcs in a different strip presentation.
    Matching with_split(int n_bottom, int m_top) const;

    std::vector<std::pair<int, int>> arcs() const;

    struct Faces {
        std::vector<int> region_index;            // per face, ascending
        std::vector<std::vector<int>> segments;   // per face, ascending segments
        std::vector<int> face_of_segment;         // segment (1-based) -> face ordinal
        int face_by_region(int region) const;
        int region_of_segment(int segment) const {
            return region_index[face_of_segment[segment]];
        }
    };
    Faces faces() const;

    bool operator==(const Matching& o) const {
        return n_bottom_ == o.n_bottom_ && partner_ == o.partner_;
    }
    bool operator<(const Matching& o) const { return partner_ < o.partner_; }

private:
    int n_bottom_ = 0, m_top_ = 0;
    std::vector<int> partner_; // 0-based storage, partner_[i] is 1-based
};

// Outer matching: k disjoint arcs in the annulus outside the disk, plus the
// index of the face containing infinity. Combinatorially the arcs form a
// noncrossing matching of the complementary disk, so faces are computed the
// same way; the infinity face choice carries the winding information, giving
// Catalan(k)*(k+1) = C(2k,k) elements in total.
struct OuterMatching {
    Matching arcs;      // split (0, 2k) is nominal; only the cyclic order matters
    int infinity_face;  // region index of the face containing infinity

    static OuterMatching make(const Matching& arcs, int infinity_face);
    bool operator==(const OuterMatching& o) const {
        return arcs == o.arcs && infinity_face == o.infinity_face;
    }
};

// All noncrossing matchings of 2k points, canonical order: point 1 pairs with
// the nearest admissible point first, recursing inside then outside.
// |result| = Catalan(k).
std::vector<Matching> enumerate_matchings(int k, int bound = 8);

// All (matching, infinity face) pairs; |result| = C(2k,k).
std::vector<OuterMatching> enumerate_outer_matchings(int k, int bound = 8);

} // namespace pdcalc
