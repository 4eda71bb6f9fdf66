#include "pdcalc/meander.hpp"

namespace pdcalc {

int loop_count(const Matching& a, const Matching& b) {
    const int pts = a.points();
    if (b.points() != pts) throw validation_error("loop_count arity mismatch");
    int n = 0;
    std::vector<bool> seen(pts + 1, false);
    for (int p0 = 1; p0 <= pts; ++p0) {
        if (seen[p0]) continue;
        ++n;
        int p = p0;
        bool first = true;
        while (!seen[p]) {
            seen[p] = true;
            p = first ? a.partner(p) : b.partner(p);
            first = !first;
        }
    }
    return n;
}

std::vector<CircleValue> shipped_circle_values() {
    std::vector<CircleValue> out;
    auto rational = [&](const std::string& label, Rational v, int m) {
        CircleValue c;
        c.label = label;
        c.rational_value = std::move(v);
        c.chebyshev_index = m;
        out.push_back(c);
    };
    auto quadratic = [&](const std::string& label, QuadExt v, int m) {
        CircleValue c;
        c.label = label;
        c.quadratic = true;
        c.quad_value = std::move(v);
        c.chebyshev_index = m;
        out.push_back(c);
    };
    rational("3", 3, 0);
    rational("0", 0, 1);          // 2cos(pi/2)
    rational("1", 1, 2);          // 2cos(pi/3)
    rational("-1", -1, 2);        // 2cos(2pi/3)
    rational("2", 2, 0);          // U_m(2) = m+1, never a root
    rational("-2", -2, 0);
    quadratic("sqrt2", QuadExt::root(2), 3);                                // 2cos(pi/4)
    quadratic("-sqrt2", -QuadExt::root(2), 3);                              // 2cos(3pi/4)
    quadratic("golden", QuadExt(Rational(1, 2), Rational(1, 2), 5), 4);     // 2cos(pi/5)
    quadratic("golden-1", QuadExt(Rational(-1, 2), Rational(1, 2), 5), 4);  // 2cos(2pi/5)
    quadratic("1-golden", QuadExt(Rational(1, 2), Rational(-1, 2), 5), 4);  // 2cos(3pi/5)
    quadratic("-golden", QuadExt(Rational(-1, 2), Rational(-1, 2), 5), 4);  // 2cos(4pi/5)
    return out;
}

MeanderReport meander_check(int n_max, int symbolic_bound) {
    if (n_max > 6) throw bound_error("meander_check limited to n <= 6");
    MeanderReport rep;
    auto values = shipped_circle_values();
    for (int n = 1; n <= n_max; ++n) {
        MeanderRow row;
        row.n = n;
        row.size = static_cast<long>(enumerate_matchings(n).size());

        Scalar sym_det;
        bool have_sym = n <= symbolic_bound;
        if (have_sym) {
            auto vars = make_vars({"d"});
            Scalar d(MultiPoly::variable(vars, 0));
            Mat<Scalar> g = meander_matrix<Scalar>(n, d, Scalar(1));
            sym_det = bareiss_det(g);
            row.det = sym_det.str();
        }

        for (const auto& v : values) {
            MeanderPoint pt;
            pt.d_label = v.label;
            pt.expect_singular = v.chebyshev_index != 0 && v.chebyshev_index <= n;
            if (!v.quadratic) {
                Mat<Rational> g = meander_matrix<Rational>(n, v.rational_value, 1);
                pt.rank = rank_kernel(g, g.size()).rank;
                if (have_sym) {
                    bool det_zero = sym_det.evaluate({v.rational_value}) == 0;
                    if (det_zero != (pt.rank < static_cast<int>(g.size())))
                        row.det_matches_rank_route = false;
                }
            } else {
                QuadExt one = QuadExt::rational(1, v.quad_value.disc());
                Mat<QuadExt> g = meander_matrix<QuadExt>(n, v.quad_value, one);
                pt.rank = rank_kernel<QuadExt>(g, g.size(), one).rank;
            }
            pt.singular = pt.rank < static_cast<int>(row.size);
            pt.ok = pt.singular == pt.expect_singular;
            if (!pt.ok) row.pass = false;
            row.points.push_back(pt);
        }
        if (!row.det_matches_rank_route) row.pass = false;
        if (!row.pass) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace pdcalc
