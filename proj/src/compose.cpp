#include "pdcalc/compose.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pdcalc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Assembles the loop forest under a set of glued faces. `loop_in_class[c]`
// is the loop whose interior face is class c (or -1), `parent_class[l]` the
// class a loop floats in, `class_contents[c]` the merged floating contents.
struct LoopAssembly {
    std::vector<int> loop_in_class;      // class -> loop id or -1
    std::vector<int> parent_class;       // loop id -> class
    std::vector<int> inner_class;        // loop id -> class
    std::vector<Contents> class_contents;

    // Builds the Loop value for loop id, consuming interior contents.
    Loop build(int id) {
        Loop l;
        int c = inner_class[id];
        l.inside = std::move(class_contents[c]);
        for (int other = 0; other < static_cast<int>(parent_class.size()); ++other)
            if (parent_class[other] == c) l.inside.loops.push_back(build(other));
        return l;
    }

    // Deposits every root loop (those floating in a boundary class) into out.
    void deposit_roots(const std::function<Contents&(int)>& region_of_class) {
        for (int id = 0; id < static_cast<int>(parent_class.size()); ++id) {
            int pc = parent_class[id];
            if (loop_in_class[pc] >= 0) continue; // floats inside another loop
            region_of_class(pc).loops.push_back(build(id));
        }
    }
};

} // namespace

DecoratedDiagram compose(const DecoratedDiagram& top, const DecoratedDiagram& bottom) {
    const Matching& B = bottom.matching;
    const Matching& T = top.matching;
    const int n = B.n_bottom(), m = B.m_top(), k = T.m_top();
    if (T.n_bottom() != m)
        throw validation_error("arity mismatch: top expects " + std::to_string(T.n_bottom()) +
                               " bottom points, bottom provides " + std::to_string(m));
    bottom.check_regions();
    top.check_regions();

    const int pb = B.points(), pt = T.points();
    // middle position j (1..m, left to right) in each diagram's numbering
    auto b_pt = [&](int j) { return n + m + 1 - j; };
    auto t_pt = [&](int j) { return j; };
    auto is_middle_b = [&](int p) { return p > n; };
    auto is_middle_t = [&](int p) { return p <= m; };

    // --- through-arcs ---------------------------------------------------
    // result points: bottom i = B's point i; top j-th from the right = T's
    // point m + j, renumbered n + j.
    std::vector<std::pair<int, int>> result_arcs;
    std::vector<bool> visited(m + 1, false);
    // Follows the path from a middle position into the given diagram; returns
    // the exit as a result point index (bottom exits keep their index, T's top
    // point m+j becomes n+j). Marks every middle position it passes.
    auto trace = [&](bool into_bottom, int j) {
        while (true) {
            visited[j] = true;
            if (into_bottom) {
                int q = B.partner(b_pt(j));
                if (!is_middle_b(q)) return q;
                j = n + m + 1 - q;
            } else {
                int q = T.partner(t_pt(j));
                if (!is_middle_t(q)) return n + (q - m);
                j = q;
            }
            into_bottom = !into_bottom;
        }
    };
    for (int i = 1; i <= n; ++i) {
        int q = B.partner(i);
        if (q <= n) {
            if (i < q) result_arcs.emplace_back(i, q);
            continue;
        }
        if (visited[n + m + 1 - q]) continue; // already traced from the other end
        result_arcs.emplace_back(i, trace(false, n + m + 1 - q));
    }
    for (int j = 1; j <= k; ++j) {
        int q = T.partner(m + j);
        if (q > m) {
            if (m + j < q) result_arcs.emplace_back(n + j, n + (q - m));
            continue;
        }
        if (visited[q]) continue; // already traced from the other end
        result_arcs.emplace_back(n + j, trace(true, q));
    }
    for (auto& a : result_arcs)
        if (a.first > a.second) std::swap(a.first, a.second);

    // --- loops at the middle line ----------------------------------------
    std::vector<std::vector<int>> loops; // middle positions of each loop, sorted
    for (int j0 = 1; j0 <= m; ++j0) {
        if (visited[j0]) continue;
        std::vector<int> cyc;
        int j = j0;
        bool in_top = true; // start by following T from middle position j0
        while (!visited[j]) {
            visited[j] = true;
            cyc.push_back(j);
            j = in_top ? T.partner(t_pt(j)) : n + m + 1 - B.partner(b_pt(j));
            in_top = !in_top;
        }
        std::sort(cyc.begin(), cyc.end());
        loops.push_back(std::move(cyc));
    }

    // --- faces glued across middle intervals ------------------------------
    auto bf = B.faces();
    auto tf = T.faces();
    const int nb_faces = static_cast<int>(bf.region_index.size());
    const int nt_faces = static_cast<int>(tf.region_index.size());
    UnionFind uf(nb_faces + nt_faces);
    // B's segment along middle interval p (0..m): the marker segment left of
    // the leftmost glued point, top pieces in between, the right edge after
    // the rightmost (which is the marker again when n = 0).
    auto b_seg = [&](int p) {
        if (pb == 0) return -1;
        if (p == 0) return n + m;
        if (p == m) return n >= 1 ? n : n + m;
        return n + m - p;
    };
    auto t_seg = [&](int p) {
        if (pt == 0) return -1;
        if (p == 0) return k >= 1 ? m + k : m;
        if (p == m) return m;
        return p;
    };
    auto b_node = [&](int p) { return bf.face_of_segment[b_seg(p)]; };
    auto t_node = [&](int p) { return nb_faces + tf.face_of_segment[t_seg(p)]; };
    if (pb > 0 && pt > 0)
        for (int p = 0; p <= m; ++p) uf.unite(b_node(p), t_node(p));
    else if (pb == 0 && pt > 0)
        uf.unite(0, t_node(0)); // closed bottom floats in top's outer face
    else if (pt == 0 && pb > 0)
        uf.unite(nb_faces, b_node(0));
    auto cls = [&](int p) { return pb > 0 ? uf.find(b_node(p)) : uf.find(t_node(p)); };

    // class contents: all face contents merged
    std::vector<Contents> class_contents(nb_faces + nt_faces);
    for (const auto& [r, c] : bottom.regions)
        class_contents[uf.find(bf.face_by_region(r))].absorb(c);
    for (const auto& [r, c] : top.regions)
        class_contents[uf.find(nb_faces + tf.face_by_region(r))].absorb(c);

    // loop adjacency: at the leftmost crossing j1, the interval right of j1
    // is inside the loop, the interval left of it is outside
    LoopAssembly la;
    la.loop_in_class.assign(nb_faces + nt_faces, -1);
    for (const auto& cyc : loops) {
        int j1 = cyc.front();
        int in_c = cls(j1), out_c = cls(j1 - 1);
        la.inner_class.push_back(in_c);
        la.parent_class.push_back(out_c);
        la.loop_in_class[in_c] = static_cast<int>(la.inner_class.size()) - 1;
    }
    la.class_contents = std::move(class_contents);

    // --- result ------------------------------------------------------------
    Matching rm = Matching::from_arcs(n, k, result_arcs);
    DecoratedDiagram out;
    out.matching = rm;
    auto rf = rm.faces();
    const int rpts = n + k;
    // result segment for a B segment (boundary pieces only)
    auto b_to_result = [&](int s) -> int {
        if (s <= n - 1) return s;
        if (s == n && n >= 1) return rpts >= 1 ? n : 1;
        if (s == n + m) return rpts >= 1 ? rpts : 1;
        return 0; // middle-line piece, interior
    };
    auto t_to_result = [&](int s) -> int {
        if (s > m && s <= m + k - 1) return n + (s - m);
        if (s == m && k >= 1) return rpts >= 1 ? (n >= 1 ? n : rpts) : 1;
        if (s == m + k && k >= 1) return rpts >= 1 ? rpts : 1;
        if (s == m && k == 0) return rpts >= 1 ? (n >= 1 ? n : rpts) : 1;
        return 0;
    };
    // map every boundary-touching class to its result region
    std::vector<int> class_region(nb_faces + nt_faces, 0);
    auto note = [&](int node, int rseg) {
        if (rseg == 0) return;
        int c = uf.find(node);
        int region = rpts == 0 ? 1 : rf.region_of_segment(rseg);
        if (class_region[c] != 0 && class_region[c] != region)
            throw validation_error("internal: glued face maps to two result regions");
        class_region[c] = region;
    };
    for (int f = 0; f < nb_faces; ++f)
        for (int s : bf.segments[f]) note(f, b_to_result(s));
    for (int f = 0; f < nt_faces; ++f)
        for (int s : tf.segments[f]) note(nb_faces + f, t_to_result(s));
    if (rpts == 0) {
        // fully closed composite: everything lives in the single region
        for (int c = 0; c < nb_faces + nt_faces; ++c)
            if (uf.find(c) == c && la.loop_in_class[c] < 0) class_region[c] = 1;
    }

    for (int c = 0; c < nb_faces + nt_faces; ++c) {
        if (uf.find(c) != c || la.loop_in_class[c] >= 0) continue;
        if (class_region[c] == 0)
            throw validation_error("internal: boundary class without result region");
        out.regions[class_region[c]].absorb(std::move(la.class_contents[c]));
    }
    // now hand loop interiors to the assembly and deposit the roots
    la.deposit_roots([&](int c) -> Contents& { return out.regions[class_region[c]]; });
    out.normalize();
    return out;
}

NestedClosure glue_disk_outer(const DecoratedDiagram& x, const DecoratedOuter& y) {
    const Matching& X = x.matching;
    const Matching& Y = y.outer.arcs;
    if (X.points() != Y.points())
        throw validation_error("arity mismatch: disk has " + std::to_string(X.points()) +
                               " points, outer has " + std::to_string(Y.points()));
    x.check_regions();
    y.check_regions();
    const int pts = X.points();

    auto xf = X.faces();
    auto yf = Y.faces();
    const int nx = static_cast<int>(xf.region_index.size());
    UnionFind uf(nx + static_cast<int>(yf.region_index.size()));
    for (int s = 1; s <= pts; ++s)
        uf.unite(xf.face_of_segment[s], nx + yf.face_of_segment[s]);

    std::vector<Contents> class_contents(uf.parent.size());
    for (const auto& [r, c] : x.regions) class_contents[uf.find(xf.face_by_region(r))].absorb(c);
    for (const auto& [r, c] : y.regions)
        class_contents[uf.find(nx + yf.face_by_region(r))].absorb(c);

    // loops: cycles alternating the two involutions
    std::vector<std::vector<int>> loops;
    std::vector<bool> visited(pts + 1, false);
    for (int p0 = 1; p0 <= pts; ++p0) {
        if (visited[p0]) continue;
        std::vector<int> cyc;
        int p = p0;
        bool inner = true;
        while (!visited[p]) {
            visited[p] = true;
            cyc.push_back(p);
            p = inner ? X.partner(p) : Y.partner(p);
            inner = !inner;
        }
        std::sort(cyc.begin(), cyc.end());
        loops.push_back(std::move(cyc));
    }

    const int root_class =
        pts == 0 ? uf.find(nx) // single face each; everything merges at the root
                 : uf.find(nx + yf.face_by_region(y.outer.infinity_face));

    // Each loop is an edge between the two classes adjacent at any of its
    // points; orienting away from the root class gives the nesting forest.
    NestedClosure out;
    out.loops_created = static_cast<int>(loops.size());
    if (pts == 0) {
        for (auto& c : class_contents) out.root.absorb(std::move(c));
        out.root.normalize();
        return out;
    }
    LoopAssembly la;
    la.loop_in_class.assign(uf.parent.size(), -1);
    std::vector<std::pair<int, int>> loop_ends;
    for (const auto& cyc : loops) {
        int p = cyc.front();
        int a = uf.find(xf.face_of_segment[p == 1 ? pts : p - 1]);
        int b = uf.find(xf.face_of_segment[p]);
        loop_ends.emplace_back(a, b);
    }
    // orient: BFS from the root over the face-loop tree
    la.inner_class.assign(loops.size(), -1);
    la.parent_class.assign(loops.size(), -1);
    std::vector<int> frontier{root_class};
    std::vector<bool> seen(uf.parent.size(), false);
    seen[root_class] = true;
    while (!frontier.empty()) {
        int c = frontier.back();
        frontier.pop_back();
        for (std::size_t l = 0; l < loops.size(); ++l) {
            if (la.parent_class[l] >= 0) continue;
            int other = -1;
            if (loop_ends[l].first == c && !seen[loop_ends[l].second]) other = loop_ends[l].second;
            if (loop_ends[l].second == c && !seen[loop_ends[l].first]) other = loop_ends[l].first;
            if (other < 0) continue;
            la.parent_class[l] = c;
            la.inner_class[l] = other;
            la.loop_in_class[other] = static_cast<int>(l);
            seen[other] = true;
            frontier.push_back(other);
        }
    }
    for (std::size_t l = 0; l < loops.size(); ++l)
        if (la.parent_class[l] < 0)
            throw validation_error("internal: face-loop incidence is not a tree");
    la.class_contents = std::move(class_contents);
    out.root = std::move(la.class_contents[root_class]);
    la.class_contents[root_class] = Contents{};
    la.deposit_roots([&](int c) -> Contents& {
        if (c != root_class) throw validation_error("internal: stray root loop");
        return out.root;
    });
    out.root.normalize();
    return out;
}

ArcDecomposition arc_decompose(const DecoratedDiagram& d) {
    ArcDecomposition out;
    out.matching = d.matching;
    std::function<int(const Contents&)> circles = [&](const Contents& c) {
        int n = c.form.circle_count();
        for (const auto& l : c.loops) n += 1 + circles(l.inside);
        return n;
    };
    for (const auto& [r, c] : d.regions) {
        out.circle_count += circles(c);
        Contents stripped;
        std::function<void(const Contents&)> collect = [&](const Contents& cc) {
            for (const auto& e : cc.elems) stripped.elems.push_back(e);
            for (const auto& l : cc.loops) collect(l.inside);
        };
        collect(c);
        stripped.normalize();
        if (!stripped.is_trivial()) out.regions[r] = std::move(stripped);
    }
    return out;
}

std::vector<int> boundary_sequence(const DecoratedDiagram& d) {
    auto fc = d.matching.faces();
    const int pts = d.matching.points();
    std::vector<int> label_of_face(fc.region_index.size(), -1);
    for (std::size_t f = 0; f < fc.region_index.size(); ++f) {
        const Contents* c = d.region(fc.region_index[f]);
        if (!c || c->elems.size() != 1 || !c->elems[0].is_basis() || !c->form.is_empty() ||
            !c->loops.empty())
            throw validation_error("region " + std::to_string(fc.region_index[f]) +
                                   " does not carry exactly one basis label");
        label_of_face[f] = c->elems[0].basis;
    }
    std::vector<int> seq(pts);
    for (int s = 1; s <= pts; ++s) seq[s - 1] = label_of_face[fc.face_of_segment[s]];
    return seq;
}

} // namespace pdcalc
