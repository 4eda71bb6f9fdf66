#pragma once

#include "pdcalc/gram.hpp"

namespace pdcalc {

// End(n) in the gligible quotient: pivot diagrams spanning the endomorphism
// space modulo the pairing kernel, with multiplication written back in the
// pivot basis. Structure constants are exact rationals.
struct TLAlgebra {
    int n = 0;
    int dim = 0;
    std::vector<DecoratedDiagram> basis; // split (n, n)
    std::vector<std::string> basis_desc;
    std::vector<Rational> unit_coords;
    // structure[i][j] = coordinates of basis[i] . basis[j]
    std::vector<std::vector<std::vector<Rational>>> structure;
};

TLAlgebra tl_algebra(int n, const CircularQuadruple& q, int bound = 4, int jobs = 1);

} // namespace pdcalc
