#include "pdcalc/gram.hpp"

#include <thread>

namespace pdcalc {

namespace {

std::vector<std::vector<int>> all_labelings(int faces, int dim) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(faces, 0);
    while (true) {
        out.push_back(cur);
        int i = faces - 1;
        while (i >= 0 && cur[i] == dim - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

DecoratedDiagram labeled_diagram(const Matching& m, const std::vector<int>& labels) {
    DecoratedDiagram d = DecoratedDiagram::plain(m);
    auto fc = m.faces();
    for (std::size_t f = 0; f < fc.region_index.size(); ++f)
        d.add_elem(fc.region_index[f], ElemRef::basis_elem(labels[f]));
    return d;
}

std::string describe(const DecoratedDiagram& d) { return d.key(); }
std::string describe(const DecoratedOuter& d) {
    DecoratedDiagram tmp{d.outer.arcs, d.regions};
    return "inf" + std::to_string(d.outer.infinity_face) + ":" + tmp.key();
}

} // namespace

SpanningSet spanning_set(int k, const CircularQuadruple& q, SpanMode mode, int bound) {
    if (k > bound)
        throw bound_error("k = " + std::to_string(k) + " exceeds bound " + std::to_string(bound));
    SpanningSet out;
    out.k = k;
    out.mode = mode;
    const int dim = q.dim();
    for (const auto& m : enumerate_matchings(k, bound)) {
        auto labelings = all_labelings(k + 1, dim);
        if (mode == SpanMode::disk) {
            for (const auto& lab : labelings) out.disk.push_back(labeled_diagram(m, lab));
        } else {
            for (int inf : m.faces().region_index)
                for (const auto& lab : labelings) {
                    DecoratedDiagram d = labeled_diagram(m, lab);
                    out.outer.push_back(
                        DecoratedOuter{OuterMatching::make(m, inf), d.regions});
                }
        }
    }
    return out;
}

Mat<Scalar> pair_matrix(const std::vector<DecoratedDiagram>& rows,
                        const std::vector<DecoratedDiagram>& cols_spherical,
                        const std::vector<DecoratedOuter>& cols_general,
                        const CircularQuadruple& q, int jobs) {
    const bool spherical = cols_general.empty();
    const std::size_t nc = spherical ? cols_spherical.size() : cols_general.size();
    Mat<Scalar> m(rows.size(), std::vector<Scalar>(nc, Scalar(0)));
    auto work = [&](std::size_t r0, std::size_t r1) {
        EvalContext ctx(q);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                m[r][c] = spherical ? pair_spherical(rows[r], cols_spherical[c], ctx)
                                    : pair_general(rows[r], cols_general[c], ctx);
    };
    if (jobs <= 1 || rows.size() < 2) {
        work(0, rows.size());
        return m;
    }
    std::vector<std::thread> pool;
    const std::size_t per = (rows.size() + jobs - 1) / jobs;
    for (std::size_t start = 0; start < rows.size(); start += per)
        pool.emplace_back(work, start, std::min(start + per, rows.size()));
    for (auto& t : pool) t.join();
    return m;
}

namespace {

void finish_report(GramReport& rep, const CircularQuadruple& q, int det_bound) {
    const std::size_t nr = rep.matrix.size();
    const std::size_t nc = nr ? rep.matrix[0].size() : rep.col_desc.size();
    bool numeric = true;
    for (const auto& row : rep.matrix)
        for (const auto& s : row)
            if (!s.is_rational()) numeric = false;
    if (numeric) {
        Mat<Rational> m(nr, std::vector<Rational>(nc));
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m[i][j] = rep.matrix[i][j].as_rational();
        auto rk = rank_kernel(m, nc);
        rep.rank = rk.rank;
        rep.kernel_basis = std::move(rk.kernel_basis);
        if (nr == nc && static_cast<int>(nr) <= det_bound) rep.det = Scalar(bareiss_det_rational(m));
    } else if (nr == nc && static_cast<int>(nr) <= det_bound) {
        rep.det = bareiss_det(rep.matrix);
    }
    (void)q;
}

} // namespace

GramReport gram_matrix(int k, const CircularQuadruple& q, PairMode mode, int jobs, int det_bound,
                       int bound) {
    GramReport rep;
    if (mode == PairMode::spherical) {
        if (!q.r_spherical)
            throw refusal_error("spherical Gram matrix requires an R-spherical quadruple");
        auto span = spanning_set(k, q, SpanMode::disk, bound);
        rep.matrix = pair_matrix(span.disk, span.disk, {}, q, jobs);
        for (const auto& d : span.disk) rep.row_desc.push_back(describe(d));
        rep.col_desc = rep.row_desc;
    } else {
        auto rows = spanning_set(k, q, SpanMode::disk, bound);
        auto cols = spanning_set(k, q, SpanMode::outer, bound);
        rep.matrix = pair_matrix(rows.disk, {}, cols.outer, q, jobs);
        for (const auto& d : rows.disk) rep.row_desc.push_back(describe(d));
        for (const auto& d : cols.outer) rep.col_desc.push_back(describe(d));
    }
    finish_report(rep, q, det_bound);
    return rep;
}

std::vector<DecoratedDiagram> diagrams_for_sequence(int k, const std::vector<int>& seq,
                                                    const CircularQuadruple& q) {
    if (static_cast<int>(seq.size()) != 2 * k)
        throw validation_error("sequence length must be 2k");
    for (int s : seq)
        if (s < 0 || s >= q.dim()) throw validation_error("sequence label out of range");
    std::vector<DecoratedDiagram> out;
    for (const auto& m : enumerate_matchings(k, std::max(k, 6))) {
        auto fc = m.faces();
        std::vector<int> labels(fc.region_index.size(), -1);
        bool ok = true;
        for (int seg = 1; seg <= 2 * k && ok; ++seg) {
            int f = fc.face_of_segment[seg];
            if (labels[f] < 0)
                labels[f] = seq[seg - 1];
            else if (labels[f] != seq[seg - 1])
                ok = false;
        }
        if (ok) out.push_back(labeled_diagram(m, labels));
    }
    return out;
}

GramReport gram_block(const std::vector<DecoratedDiagram>& items, const CircularQuadruple& q,
                      int jobs, int det_bound) {
    GramReport rep;
    rep.matrix = pair_matrix(items, items, {}, q, jobs);
    for (const auto& d : items) rep.row_desc.push_back(describe(d));
    rep.col_desc = rep.row_desc;
    if (items.empty()) rep.det = Scalar(1); // empty block convention
    finish_report(rep, q, det_bound);
    if (items.empty()) rep.rank = 0;
    return rep;
}

std::string sequence_string(const std::vector<int>& seq) {
    std::string s;
    for (int x : seq) s += std::to_string(x + 1);
    return s;
}

GramBlocks gram_blocks(int k, const CircularQuadruple& q, bool verify_cross, int jobs,
                       int det_bound) {
    if (!q.algebra.idempotent_basis)
        throw refusal_error("gram_blocks requires an idempotent basis");
    if (!q.r_spherical) throw refusal_error("gram_blocks requires an R-spherical quadruple");
    GramBlocks out;
    // enumerate every sequence so empty blocks are reported too
    std::vector<int> seq(2 * k, 0);
    while (true) {
        auto items = diagrams_for_sequence(k, seq, q);
        out.blocks.emplace(sequence_string(seq), gram_block(items, q, jobs, det_bound));
        int i = 2 * k - 1;
        while (i >= 0 && seq[i] == q.dim() - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    if (verify_cross) {
        auto span = spanning_set(k, q, SpanMode::disk);
        EvalContext ctx(q);
        for (const auto& a : span.disk)
            for (const auto& b : span.disk) {
                if (boundary_sequence(a) == boundary_sequence(b)) continue;
                if (!pair_spherical(a, b, ctx).is_zero()) {
                    out.cross_blocks_zero = false;
                    return out;
                }
            }
    }
    return out;
}

int state_dim(int k, const CircularQuadruple& q, int jobs, int bound) {
    if (q.symbolic())
        throw validation_error("state_dim needs numeric parameters; specialize first");
    auto rep = gram_matrix(k, q, q.r_spherical ? PairMode::spherical : PairMode::general, jobs,
                           0, bound);
    return rep.rank;
}

int hom_dim(int n, int m, const CircularQuadruple& q, int jobs, int bound) {
    if ((n + m) % 2 != 0) return 0;
    return state_dim((n + m) / 2, q, jobs, bound);
}

} // namespace pdcalc
