#pragma once

#include "pdcalc/gram.hpp"

namespace pdcalc {

// One published row: boundary sequence (digits 1/2), number of compatible
// diagrams, and the factored Gram-block determinant. Two published rows carry
// errata (see published_table); for those, `corrected` holds the determinant
// consistent with the b-grading, and `det` the value as printed.
struct TableRowSpec {
    const char* seq;
    int count;
    const char* det;
    const char* corrected = nullptr;
};

// Rows of the published determinant tables for n = 2..5 (n = 5 is partial).
const std::vector<TableRowSpec>& published_table(int n);

struct TableRowResult {
    std::string seq;
    int expected_count = 0, count = 0;
    bool count_ok = false;
    bool det_ok = false;           // against the determinant as printed
    bool det_ok_corrected = false; // against the erratum correction, if any
    bool has_erratum = false;
    std::string expected_det;
    bool pass() const { return count_ok && det_ok; }
    bool pass_with_errata() const {
        return count_ok && (det_ok || (has_erratum && det_ok_corrected));
    }
};

struct TableReport {
    int n = 0;
    uint64_t seed = 0;
    int trials = 0;
    std::vector<TableRowResult> rows;
    bool pass = true;             // every row matches as printed
    bool pass_with_errata = true; // rows match as printed or via a documented erratum
};

// Verifies every published row for the given n against the symbolic
// two-dimensional idempotent spherical fixture: diagram counts exactly, and
// the block determinant against the printed expression at `trials` seeded
// rational points of the sphericality variety.
TableReport table_verify(int n, const CircularQuadruple& ss2, uint64_t seed = 0, int trials = 25,
                         int jobs = 1);

// The symbolic k-dimensional semisimple idempotent quadruple with omega
// matrix (a_ij), trace (b_i), and the sphericality constraints
// b_i a_ij = b_j a_ji.
CircularQuadruple make_semisimple_quadruple(int k_dim);

struct ExperimentRank {
    int n = 0;
    std::size_t span = 0;
    int rank = 0;
    bool full = false;
};

struct ExperimentReport {
    int k_dim = 0, n_max = 0;
    uint64_t seed = 0;
    std::vector<std::string> points;              // sampled parameters, for reproducibility
    std::vector<std::vector<ExperimentRank>> ranks; // per point
    bool full_rank_all = true;
    // Chebyshev scan (reported, never asserted): which blocks vanish at
    // root-of-unity circle values of c12 = sqrt(b1/b2) a12.
    std::vector<std::string> chebyshev_notes;
};

// Prop.-5.3-style experiment: at seeded random spherical parameter points the
// spherical Gram matrix has full rank for every n <= n_max.
ExperimentReport generic_nondegeneracy_experiment(int k_dim, int n_max, uint64_t seed,
                                                  int points = 5, int jobs = 1);

} // namespace pdcalc
