#pragma once

#include <map>
#include <optional>

#include "pdcalc/eval.hpp"

namespace pdcalc {

enum class SpanMode { disk, outer };
enum class PairMode { spherical, general };

// Spanning diagrams for Hom(0, 2k): every matching combined with every
// assignment of basis elements to its k+1 regions. Disk items are presented
// with split (0, 2k); outer items additionally range over infinity faces.
// |disk| = Catalan(k) * dim^(k+1), |outer| = Catalan(k) * (k+1) * dim^(k+1).
struct SpanningSet {
    int k = 0;
    SpanMode mode = SpanMode::disk;
    std::vector<DecoratedDiagram> disk;
    std::vector<DecoratedOuter> outer;

    std::size_t size() const { return mode == SpanMode::disk ? disk.size() : outer.size(); }
};
SpanningSet spanning_set(int k, const CircularQuadruple& q, SpanMode mode, int bound = 6);

// Gram matrix data over the spanning set. Numeric quadruples get rank and a
// kernel basis; square symbolic matrices up to det_bound get a determinant.
struct GramReport {
    Mat<Scalar> matrix;
    std::vector<std::string> row_desc, col_desc;
    int rank = -1; // -1 when not computed (symbolic entries)
    std::vector<std::vector<Rational>> kernel_basis;
    std::optional<Scalar> det;
};

GramReport gram_matrix(int k, const CircularQuadruple& q, PairMode mode, int jobs = 1,
                       int det_bound = 12, int bound = 6);

// The diagrams of the disk spanning set whose region labels induce the given
// boundary sequence (0-based basis indices, segment 1 first).
std::vector<DecoratedDiagram> diagrams_for_sequence(int k, const std::vector<int>& seq,
                                                    const CircularQuadruple& q);

// Spherical Gram matrix restricted to one boundary sequence block.
GramReport gram_block(const std::vector<DecoratedDiagram>& items, const CircularQuadruple& q,
                      int jobs = 1, int det_bound = 12);

// All blocks keyed by boundary sequence (digits are 1-based basis indices).
// Sequences with no compatible diagram appear as 0x0 blocks of determinant 1.
// verify_cross additionally checks that cross-block pairings vanish.
struct GramBlocks {
    std::map<std::string, GramReport> blocks;
    bool cross_blocks_zero = true;
};
GramBlocks gram_blocks(int k, const CircularQuadruple& q, bool verify_cross = false,
                       int jobs = 1, int det_bound = 12);

std::string sequence_string(const std::vector<int>& seq);

// Rank of the Gram pairing on the spanning set: the spherical disk x disk
// pairing when the quadruple is R-spherical, the disk x outer pairing
// otherwise. Numeric quadruples only.
int state_dim(int k, const CircularQuadruple& q, int jobs = 1, int bound = 6);

// dim Hom(n, m) in the gligible quotient via bending: 0 for odd n+m, else
// state_dim((n+m)/2).
int hom_dim(int n, int m, const CircularQuadruple& q, int jobs = 1, int bound = 6);

// Entry-wise parallel map helper shared by the gram builders: each worker
// evaluates with its own context.
Mat<Scalar> pair_matrix(const std::vector<DecoratedDiagram>& rows,
                        const std::vector<DecoratedDiagram>& cols_spherical,
                        const std::vector<DecoratedOuter>& cols_general,
                        const CircularQuadruple& q, int jobs);

} // namespace pdcalc
