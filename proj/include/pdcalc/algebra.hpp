#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdcalc/linalg.hpp"
#include "pdcalc/scalar.hpp"

namespace pdcalc {

using Vec = std::vector<Scalar>;

// Finite-dimensional commutative algebra given by structure constants:
// mult[i][j] is the coordinate vector of e_i * e_j.
struct CommAlgebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    Vec unit;
    std::vector<std::vector<Vec>> mult;
    bool idempotent_basis = false;

    Vec zero() const { return Vec(dim, Scalar(0)); }
    Vec basis(int i) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec scale(const Scalar& c, const Vec& v) const;
    Vec add(const Vec& a, const Vec& b) const;
};

// A commutative algebra with a linear wrapping map omega (given columnwise:
// omega(e_j) = sum_i a[i][j] e_i) and a trace covector epsilon. The spherical
// flags are computed by validation, never asserted by the caller. Symbolic
// quadruples may carry constraints (pairs of expressions declared equal on
// the parameter variety); axioms are then tested modulo the constraints by
// seeded random evaluation.
struct CircularQuadruple {
    CommAlgebra algebra;
    std::vector<Vec> omega; // omega[i][j], row i, column j
    Vec trace;
    VarTable vars;                                    // null for numeric quadruples
    std::vector<std::pair<Scalar, Scalar>> constraints;
    std::string name;

    bool z_spherical = false;
    bool r_spherical = false;

    int dim() const { return algebra.dim; }
    bool symbolic() const { return vars != nullptr; }
    Vec apply_omega(const Vec& v) const;
    Scalar apply_trace(const Vec& v) const;

    // Specialize symbolic parameters to rationals; assignment is by variable order.
    CircularQuadruple specialize(const std::vector<Rational>& point) const;
};

struct AxiomCheck {
    std::string axiom;
    bool pass = false;
    bool modulo_constraints = false; // verified on the constraint variety only
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool commutative = false, associative = false, unital = false;
    bool idempotent_ok = true;
    bool z_spherical = false, r_spherical = false, trace_nonzero = false;
    bool all_pass() const;
};

// Checks: commutative, associative, unital, idempotent basis (when flagged),
// Z-spherical (omega(z) = z*omega(1)), R-spherical (eps(e_i omega(e_j))
// symmetric), trace nonzero. Never mutates. For symbolic quadruples with
// constraints, failed exact identities are retried on the variety with the
// given seed.
ValidationReport validate_quadruple(const CircularQuadruple& q, uint64_t seed = 0);

// Computes validation and stores the spherical flags on the quadruple.
void annotate_spherical_flags(CircularQuadruple& q, uint64_t seed = 0);

// The smallest subalgebra containing 1 and closed under omega (numeric
// quadruples over Q only).
struct OmegaSubalgebra {
    int dim = 0;
    std::vector<Vec> basis; // vectors in the ambient algebra, echelonized
    bool surjective = false;
};
OmegaSubalgebra omega_generated_subalgebra(const CircularQuadruple& q);

// Functional closure of the trace on Z': start with x -> eps(z*x), close
// under precomposition with omega then multiplication by basis elements.
// K is the common kernel; A(0) = Z'/K carries the induced product, omega,
// and trace.
struct PairingRadical {
    OmegaSubalgebra zprime;
    int radical_dim = 0;
    std::vector<Vec> radical_basis; // in ambient coordinates
    int a0_dim = 0;
    std::vector<std::vector<Rational>> functionals; // on Z' coordinates
};
PairingRadical pairing_radical(const CircularQuadruple& q);

// Deterministic sampler for rational points; values are nonzero with
// numerators in a 2^32-sized set.
class RationalSampler {
public:
    explicit RationalSampler(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}
    Rational nonzero();
    uint64_t raw();

private:
    uint64_t state_;
};

// Probabilistic identity test with exact arithmetic: lhs == rhs at `trials`
// seeded random points of the constraint variety. The variety is sampled by
// the quadruple's constraint structure (see sample_point).
bool identity_check_on_variety(const Scalar& lhs, const Scalar& rhs,
                               const CircularQuadruple& q, uint64_t seed, int trials = 25);

// A random rational point for the quadruple's variables satisfying its
// constraints. Constraints of the shape  b_i * a_ij = b_j * a_ji  are solved
// by substitution a_ji := b_i a_ij / b_j; all other variables are sampled
// freely (and nonzero).
std::vector<Rational> sample_point(const CircularQuadruple& q, RationalSampler& rng);

} // namespace pdcalc
