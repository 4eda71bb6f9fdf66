#include "pdcalc/matching.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pdcalc {

Matching Matching::from_arcs(int n_bottom, int m_top,
                             const std::vector<std::pair<int, int>>& arcs) {
    if (n_bottom < 0 || m_top < 0 || (n_bottom + m_top) % 2 != 0)
        throw validation_error("matching split must have even total");
    const int pts = n_bottom + m_top;
    if (static_cast<int>(arcs.size()) * 2 != pts)
        throw validation_error("matching needs exactly k arcs for 2k points");
    Matching m;
    m.n_bottom_ = n_bottom;
    m.m_top_ = m_top;
    m.partner_.assign(pts, 0);
    for (auto [a, b] : arcs) {
        if (a < 1 || a > pts || b < 1 || b > pts || a == b)
            throw validation_error("arc endpoint out of range");
        if (m.partner_[a - 1] || m.partner_[b - 1])
            throw validation_error("point matched twice");
        m.partner_[a - 1] = b;
        m.partner_[b - 1] = a;
    }
    // noncrossing in the cyclic order: no arcs (a,b),(c,d) with a<c<b<d
    auto sorted = m.arcs();
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            auto [a, b] = sorted[i];
            auto [c, d] = sorted[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw validation_error("crossing arcs (" + std::to_string(a) + "," +
                                       std::to_string(b) + ") and (" + std::to_string(c) +
                                       "," + std::to_string(d) + ")");
        }
    return m;
}

Matching Matching::with_split(int n_bottom, int m_top) const {
    if (n_bottom + m_top != points())
        throw validation_error("split does not match point count");
    Matching m(*this);
    m.n_bottom_ = n_bottom;
    m.m_top_ = m_top;
    return m;
}

std::vector<std::pair<int, int>> Matching::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= points(); ++p)
        if (p < partner(p)) out.emplace_back(p, partner(p));
    return out;
}

int Matching::Faces::face_by_region(int region) const {
    for (std::size_t i = 0; i < region_index.size(); ++i)
        if (region_index[i] == region) return static_cast<int>(i);
    throw validation_error("no region with index " + std::to_string(region));
}

Matching::Faces Matching::faces() const {
    Faces f;
    const int pts = points();
    if (pts == 0) {
        f.region_index = {1};
        f.segments = {{}};
        return f;
    }
    // Segment s lies inside arc (a,b), a<b, iff a <= s < b. Segments sharing
    // the same arc signature form one face.
    auto ar = arcs();
    std::map<std::vector<bool>, std::vector<int>> groups;
    for (int s = 1; s <= pts; ++s) {
        std::vector<bool> sig(ar.size());
        for (std::size_t i = 0; i < ar.size(); ++i)
            sig[i] = ar[i].first <= s && s < ar[i].second;
        groups[sig].push_back(s);
    }
    std::vector<std::pair<int, std::vector<int>>> faces;
    for (auto& [sig, segs] : groups) faces.emplace_back(segs.front(), segs);
    std::sort(faces.begin(), faces.end());
    f.face_of_segment.assign(pts + 1, -1);
    for (auto& [region, segs] : faces) {
        int ordinal = static_cast<int>(f.region_index.size());
        f.region_index.push_back(region);
        for (int s : segs) f.face_of_segment[s] = ordinal;
        f.segments.push_back(std::move(segs));
    }
    return f;
}

OuterMatching OuterMatching::make(const Matching& arcs, int infinity_face) {
    auto fc = arcs.faces();
    fc.face_by_region(infinity_face); // throws if invalid
    return OuterMatching{arcs, infinity_face};
}

namespace {

using ArcSet = std::vector<std::pair<int, int>>;

// Noncrossing matchings of the interval [lo, hi]: point lo pairs with lo+1,
// lo+3, ... in turn; inside and outside recurse.
std::vector<ArcSet> gen_interval(int lo, int hi) {
    if (lo > hi) return {ArcSet{}};
    std::vector<ArcSet> out;
    for (int j = lo + 1; j <= hi; j += 2) {
        for (const auto& inner : gen_interval(lo + 1, j - 1))
            for (const auto& outer : gen_interval(j + 1, hi)) {
                ArcSet a;
                a.emplace_back(lo, j);
                a.insert(a.end(), inner.begin(), inner.end());
                a.insert(a.end(), outer.begin(), outer.end());
                out.push_back(std::move(a));
            }
    }
    return out;
}

} // namespace

std::vector<Matching> enumerate_matchings(int k, int bound) {
    if (k < 0) throw validation_error("negative k");
    if (k > bound)
        throw bound_error("k = " + std::to_string(k) + " exceeds bound " + std::to_string(bound));
    std::vector<Matching> out;
    for (const auto& a : gen_interval(1, 2 * k)) out.push_back(Matching::from_arcs(0, 2 * k, a));
    return out;
}

std::vector<OuterMatching> enumerate_outer_matchings(int k, int bound) {
    std::vector<OuterMatching> out;
    for (const auto& m : enumerate_matchings(k, bound))
        for (int region : m.faces().region_index) out.push_back(OuterMatching{m, region});
    return out;
}

} // namespace pdcalc
