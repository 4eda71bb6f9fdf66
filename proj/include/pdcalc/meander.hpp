#pragma once

#include "pdcalc/gram.hpp"
#include "pdcalc/quadratic.hpp"

namespace pdcalc {

// Number of closed loops in the gluing of two matchings of 2k points
// (the circles of reflect(b) . a).
int loop_count(const Matching& a, const Matching& b);

// The meander matrix G_2n(d) with entries d^loops over any commutative carrier.
template <class F>
Mat<F> meander_matrix(int n, const F& d, const F& one) {
    auto ms = enumerate_matchings(n);
    Mat<F> g(ms.size(), std::vector<F>(ms.size(), one));
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) {
            F v = one;
            int loops = loop_count(ms[i], ms[j]);
            for (int t = 0; t < loops; ++t) v = v * d;
            g[i][j] = v;
        }
    return g;
}

// One circle value to test: a rational d or an element of a quadratic field,
// with the order of the root of unity q for d = q + 1/q (0 when d is generic).
struct CircleValue {
    std::string label;
    bool quadratic = false;
    Rational rational_value;
    QuadExt quad_value;
    int chebyshev_index = 0; // smallest m with U_m(d) = 0, 0 if none
};

struct MeanderPoint {
    std::string d_label;
    int rank = 0;
    bool expect_singular = false;
    bool singular = false;
    bool ok = false;
};

struct MeanderRow {
    int n = 0;
    long size = 0;
    std::string det; // symbolic determinant over Q[d], empty if skipped
    bool det_matches_rank_route = true;
    std::vector<MeanderPoint> points;
    bool pass = true;
};

struct MeanderReport {
    std::vector<MeanderRow> rows;
    bool pass = true;
};

// The shipped circle values: 3 (generic), 0, +-1, +-2, +-sqrt(2), and the four
// golden-ratio values 2cos(k pi / 5).
std::vector<CircleValue> shipped_circle_values();

// For each n <= n_max: G_2n(d) has full rank at generic d and drops rank
// exactly at the roots of the Chebyshev polynomials U_m, m <= n. The symbolic
// determinant over Q[d] is computed for n <= symbolic_bound and cross-checked
// against the rank route at every rational sample value.
MeanderReport meander_check(int n_max, int symbolic_bound = 5);

} // namespace pdcalc
