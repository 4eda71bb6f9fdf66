#include "pdcalc/tl.hpp"

namespace pdcalc {

namespace {

struct PivotData {
    std::vector<DecoratedDiagram> span;
    std::vector<DecoratedOuter> functionals;
    std::vector<std::size_t> pivot_rows, pivot_cols;
    Mat<Rational> p0; // pivot submatrix, invertible
};

// Row/column pivot selection by Gaussian elimination over Q.
PivotData build_pivots(int n, const CircularQuadruple& q, int bound, int jobs) {
    PivotData out;
    auto rows = spanning_set(n, q, SpanMode::disk, bound);
    auto cols = spanning_set(n, q, SpanMode::outer, bound);
    for (auto& d : rows.disk) out.span.push_back(DecoratedDiagram{d.matching.with_split(n, n),
                                                                  d.regions});
    out.functionals = cols.outer;

    Mat<Scalar> ps = pair_matrix(out.span, {}, out.functionals, q, jobs);
    const std::size_t nr = ps.size(), nc = out.functionals.size();
    Mat<Rational> m(nr, std::vector<Rational>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m[i][j] = ps[i][j].as_rational();

    // forward elimination, remembering which original rows/columns carry pivots
    Mat<Rational> work = m;
    std::vector<std::size_t> row_of(nr);
    for (std::size_t i = 0; i < nr; ++i) row_of[i] = i;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && work[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(work[p], work[r]);
        std::swap(row_of[p], row_of[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (work[i][c] == 0) continue;
            Rational f = work[i][c] / work[r][c];
            for (std::size_t j = c; j < nc; ++j) work[i][j] -= f * work[r][j];
        }
        out.pivot_rows.push_back(row_of[r]);
        out.pivot_cols.push_back(c);
        ++r;
    }
    std::sort(out.pivot_rows.begin(), out.pivot_rows.end());
    out.p0.assign(out.pivot_rows.size(), std::vector<Rational>(out.pivot_cols.size()));
    for (std::size_t i = 0; i < out.pivot_rows.size(); ++i)
        for (std::size_t j = 0; j < out.pivot_cols.size(); ++j)
            out.p0[i][j] = m[out.pivot_rows[i]][out.pivot_cols[j]];
    return out;
}

std::vector<Rational> coords_from_pairings(const PivotData& pd,
                                           const std::vector<Rational>& row) {
    // solve sum_i c_i * p0[i][j] = row[j] for the pivot columns
    const std::size_t r = pd.pivot_rows.size();
    Mat<Rational> a(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a[i][j] = pd.p0[j][i]; // transpose
    return solve_square(a, row);
}

std::vector<Rational> pairing_row(const DecoratedDiagram& x, const PivotData& pd,
                                  const CircularQuadruple& q) {
    EvalContext ctx(q);
    std::vector<Rational> row;
    row.reserve(pd.pivot_cols.size());
    for (std::size_t c : pd.pivot_cols)
        row.push_back(pair_general(x, pd.functionals[c], ctx).as_rational());
    return row;
}

} // namespace

TLAlgebra tl_algebra(int n, const CircularQuadruple& q, int bound, int jobs) {
    if (q.symbolic())
        throw validation_error("tl_algebra needs numeric parameters; specialize first");
    if (n > bound)
        throw bound_error("n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    PivotData pd = build_pivots(n, q, bound, jobs);

    TLAlgebra alg;
    alg.n = n;
    alg.dim = static_cast<int>(pd.pivot_rows.size());
    for (std::size_t i : pd.pivot_rows) {
        alg.basis.push_back(pd.span[i]);
        alg.basis_desc.push_back(pd.span[i].key());
    }

    // identity element: the identity matching with no labels
    std::vector<std::pair<int, int>> id_arcs;
    for (int i = 1; i <= n; ++i) id_arcs.emplace_back(i, 2 * n + 1 - i);
    DecoratedDiagram id_diag = DecoratedDiagram::plain(Matching::from_arcs(n, n, id_arcs));
    alg.unit_coords = coords_from_pairings(pd, pairing_row(id_diag, pd, q));

    alg.structure.assign(alg.dim, std::vector<std::vector<Rational>>(alg.dim));
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            DecoratedDiagram prod = compose(alg.basis[i], alg.basis[j]);
            alg.structure[i][j] = coords_from_pairings(pd, pairing_row(prod, pd, q));
        }

    // internal sanity: structure constants are associative and unital
    auto mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> out(alg.dim, 0);
        for (int i = 0; i < alg.dim; ++i)
            for (int j = 0; j < alg.dim; ++j) {
                if (x[i] == 0 || y[j] == 0) continue;
                for (int l = 0; l < alg.dim; ++l)
                    out[l] += x[i] * y[j] * alg.structure[i][j][l];
            }
        return out;
    };
    auto basis_vec = [&](int i) {
        std::vector<Rational> v(alg.dim, 0);
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < alg.dim; ++i) {
        if (mul(alg.unit_coords, basis_vec(i)) != basis_vec(i) ||
            mul(basis_vec(i), alg.unit_coords) != basis_vec(i))
            throw validation_error("TL structure constants fail the unit axiom");
        for (int j = 0; j < alg.dim; ++j)
            for (int l = 0; l < alg.dim; ++l)
                if (mul(mul(basis_vec(i), basis_vec(j)), basis_vec(l)) !=
                    mul(basis_vec(i), mul(basis_vec(j), basis_vec(l))))
                    throw validation_error("TL structure constants fail associativity");
    }
    return alg;
}

} // namespace pdcalc
