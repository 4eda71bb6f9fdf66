#include "pdcalc/diagram.hpp"

#include <algorithm>
#include <functional>

namespace pdcalc {

std::string ElemRef::key() const {
    if (is_basis()) return "e" + std::to_string(basis);
    std::string s = "v[";
    for (const auto& c : coords) s += c.str() + ",";
    s += "]";
    return s;
}

bool Contents::is_trivial() const { return form.is_empty() && elems.empty() && loops.empty(); }

void Contents::absorb(Contents other) {
    form *= other.form;
    for (auto& e : other.elems) elems.push_back(std::move(e));
    for (auto& l : other.loops) loops.push_back(std::move(l));
}

void Contents::normalize() {
    std::vector<Loop> kept;
    for (auto& l : loops) {
        l.inside.normalize();
        if (l.inside.elems.empty() && l.inside.loops.empty())
            form *= CircularForm::wrap(l.inside.form);
        else
            kept.push_back(std::move(l));
    }
    loops = std::move(kept);
    std::sort(elems.begin(), elems.end(),
              [](const ElemRef& a, const ElemRef& b) { return a.key() < b.key(); });
    std::sort(loops.begin(), loops.end(),
              [](const Loop& a, const Loop& b) { return a.inside.key() < b.inside.key(); });
}

std::string Contents::key() const {
    Contents c(*this);
    c.normalize();
    std::string s = "{" + c.form.encode();
    for (const auto& e : c.elems) s += ";" + e.key();
    for (const auto& l : c.loops) s += ";L" + l.inside.key();
    s += "}";
    return s;
}

const Contents* DecoratedDiagram::region(int index) const {
    auto it = regions.find(index);
    return it == regions.end() ? nullptr : &it->second;
}

void DecoratedDiagram::add_form(int region, const CircularForm& u) {
    regions[region].form *= u;
}

void DecoratedDiagram::add_elem(int region, ElemRef e) {
    regions[region].elems.push_back(std::move(e));
}

void DecoratedDiagram::check_regions() const {
    auto fc = matching.faces();
    for (const auto& [r, c] : regions) fc.face_by_region(r);
}

void DecoratedDiagram::normalize() {
    for (auto it = regions.begin(); it != regions.end();) {
        it->second.normalize();
        it = it->second.is_trivial() ? regions.erase(it) : std::next(it);
    }
}

std::string DecoratedDiagram::key() const {
    std::string s = "M" + std::to_string(matching.n_bottom()) + ":" +
                    std::to_string(matching.m_top()) + "[";
    for (auto [a, b] : matching.arcs())
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    s += "]";
    DecoratedDiagram d(*this);
    d.normalize();
    for (const auto& [r, c] : d.regions) s += std::to_string(r) + c.key();
    return s;
}

void DecoratedOuter::add_elem(int region, ElemRef e) {
    regions[region].elems.push_back(std::move(e));
}

void DecoratedOuter::check_regions() const {
    auto fc = outer.arcs.faces();
    for (const auto& [r, c] : regions) fc.face_by_region(r);
}

std::string NestedClosure::key() const { return root.key(); }

namespace {

// Carries region contents through a point relabeling: region r of the source
// maps to the region of `target` containing the image of any segment of r.
std::map<int, Contents> map_regions(const std::map<int, Contents>& regions,
                                    const Matching::Faces& src, const Matching::Faces& dst,
                                    const std::vector<int>& segment_image) {
    std::map<int, Contents> out;
    for (const auto& [r, c] : regions) {
        if (c.is_trivial()) continue;
        const auto& segs = src.segments[src.face_by_region(r)];
        if (segs.empty()) {
            // closed diagram: single region on both sides
            out[dst.region_index.front()].absorb(c);
            continue;
        }
        int image = dst.region_of_segment(segment_image[segs.front()]);
        for (int s : segs)
            if (dst.region_of_segment(segment_image[s]) != image)
                throw validation_error("region mapping split a face");
        out[image].absorb(c);
    }
    return out;
}

} // namespace

Matching reflect(const Matching& m) {
    const int n = m.n_bottom(), t = m.m_top(), pts = m.points();
    auto phi = [&](int p) { return p <= n ? t + (n + 1 - p) : pts + 1 - p; };
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : m.arcs()) arcs.emplace_back(phi(a), phi(b));
    return Matching::from_arcs(t, n, arcs);
}

DecoratedDiagram reflect(const DecoratedDiagram& d) {
    const Matching& m = d.matching;
    const int n = m.n_bottom(), t = m.m_top(), pts = m.points();
    Matching rm = reflect(m);
    // image of source segment s: bottom pieces swap with top pieces, the right
    // edge (segment n) maps to the new right edge (segment t), the marker stays
    std::vector<int> seg_image(pts + 1, 0);
    for (int s = 1; s <= pts; ++s) {
        int img;
        if (s <= n - 1)
            img = t + (n - s); // bottom line piece between p, p+1 -> top piece
        else if (s == n)
            img = t; // right edge
        else if (s < pts)
            img = n + t - s; // top line piece -> bottom piece
        else
            img = pts; // marker segment, left edge
        seg_image[s] = img;
    }
    DecoratedDiagram out;
    out.matching = rm;
    if (pts == 0) {
        out.regions = d.regions;
        return out;
    }
    out.regions = map_regions(d.regions, m.faces(), rm.faces(), seg_image);
    return out;
}

Matching rotate(const Matching& m, int s) {
    const int pts = m.points();
    if (pts == 0) return m;
    auto phi = [&](int p) { return (p - 1 + s % pts + pts) % pts + 1; };
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : m.arcs()) arcs.emplace_back(phi(a), phi(b));
    return Matching::from_arcs(m.n_bottom(), m.m_top(), arcs);
}

DecoratedDiagram rotate(const DecoratedDiagram& d, int s) {
    const int pts = d.matching.points();
    if (pts == 0) return d;
    Matching rm = rotate(d.matching, s);
    std::vector<int> seg_image(pts + 1, 0);
    for (int seg = 1; seg <= pts; ++seg) seg_image[seg] = (seg - 1 + s % pts + pts) % pts + 1;
    DecoratedDiagram out;
    out.matching = rm;
    out.regions = map_regions(d.regions, d.matching.faces(), rm.faces(), seg_image);
    return out;
}

OuterMatching rotate(const OuterMatching& m, int s) {
    Matching rm = rotate(m.arcs, s);
    const int pts = m.arcs.points();
    if (pts == 0) return m;
    int seg = m.arcs.faces().segments[m.arcs.faces().face_by_region(m.infinity_face)].front();
    int img = (seg - 1 + s % pts + pts) % pts + 1;
    return OuterMatching::make(rm, rm.faces().region_of_segment(img));
}

DecoratedOuter rotate(const DecoratedOuter& d, int s) {
    const int pts = d.outer.arcs.points();
    if (pts == 0) return d;
    OuterMatching rm = rotate(d.outer, s);
    std::vector<int> seg_image(pts + 1, 0);
    for (int seg = 1; seg <= pts; ++seg) seg_image[seg] = (seg - 1 + s % pts + pts) % pts + 1;
    DecoratedOuter out;
    out.outer = rm;
    out.regions = map_regions(d.regions, d.outer.arcs.faces(), rm.arcs.faces(), seg_image);
    return out;
}

DecoratedDiagram tensor(const DecoratedDiagram& d1, const DecoratedDiagram& d2) {
    const int n1 = d1.matching.n_bottom(), m1 = d1.matching.m_top();
    const int n2 = d2.matching.n_bottom(), m2 = d2.matching.m_top();
    const int p1 = d1.matching.points(), p2 = d2.matching.points();
    // d1 sits on the left: its bottom points keep indices, its top points shift
    // past d2's; d2's points slot in between.
    auto phi1 = [&](int p) { return p <= n1 ? p : p + n2 + m2; };
    auto phi2 = [&](int p) { return p <= n2 ? n1 + p : n1 + p; };
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d1.matching.arcs()) arcs.emplace_back(phi1(a), phi1(b));
    for (auto [a, b] : d2.matching.arcs()) arcs.emplace_back(phi2(a), phi2(b));
    Matching rm = Matching::from_arcs(n1 + n2, m1 + m2, arcs);
    DecoratedDiagram out;
    out.matching = rm;
    if (p1 + p2 == 0) {
        out.regions[1] = {};
        for (const auto& [r, c] : d1.regions) out.regions[1].absorb(c);
        for (const auto& [r, c] : d2.regions) out.regions[1].absorb(c);
        out.normalize();
        return out;
    }
    auto dst = rm.faces();
    // segment images; the closed factor case places everything in the merged region
    auto seg1 = [&](int s) { // segment s of d1 -> result segment
        if (s <= n1 - 1) return s;
        if (s == n1) return n1; // d1's right edge meets d2's marker region
        if (s < p1) return s + n2 + m2;
        return n1 + n2 + m2 + m1; // marker
    };
    auto seg2 = [&](int s) { // segment s of d2 -> result segment
        if (s <= n2 - 1) return n1 + s;
        if (s == n2) return n1 + n2;
        if (s < p2) return n1 + s;
        // d2's marker face merges with the face right of d1: across the bottom
        // piece between the factors when d1 has bottom points, else across the
        // top piece between the factors.
        return n1 >= 1 ? n1 : n2 + m2;
    };
    if (p1 == 0) {
        // d1 closed: its contents join d2's marker-segment region
        out.regions = map_regions(d2.regions, d2.matching.faces(), dst, [&] {
            std::vector<int> v(p2 + 1);
            for (int s = 1; s <= p2; ++s) v[s] = seg2(s);
            return v;
        }());
        int host = dst.region_of_segment(seg2(p2));
        for (const auto& [r, c] : d1.regions) out.regions[host].absorb(c);
    } else if (p2 == 0) {
        out.regions = map_regions(d1.regions, d1.matching.faces(), dst, [&] {
            std::vector<int> v(p1 + 1);
            for (int s = 1; s <= p1; ++s) v[s] = seg1(s);
            return v;
        }());
        int host = dst.region_of_segment(seg1(n1 == 0 ? p1 : n1));
        for (const auto& [r, c] : d2.regions) out.regions[host].absorb(c);
    } else {
        std::vector<int> v1(p1 + 1), v2(p2 + 1);
        for (int s = 1; s <= p1; ++s) v1[s] = seg1(s);
        for (int s = 1; s <= p2; ++s) v2[s] = seg2(s);
        out.regions = map_regions(d1.regions, d1.matching.faces(), dst, v1);
        for (auto& [r, c] : map_regions(d2.regions, d2.matching.faces(), dst, v2))
            out.regions[r].absorb(std::move(c));
    }
    out.normalize();
    return out;
}

} // namespace pdcalc
