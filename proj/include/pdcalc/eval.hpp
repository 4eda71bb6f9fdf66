#pragma once

#include <unordered_map>

#include "pdcalc/algebra.hpp"
#include "pdcalc/compose.hpp"

namespace pdcalc {

// Evaluation state for one quadruple. The memo caches tree-encoding ->
// coordinate vector; entries always equal a fresh recursive evaluation, so
// concurrent use wants one context per worker.
struct EvalContext {
    const CircularQuadruple& q;
    std::unordered_map<std::string, Vec> memo;

    explicit EvalContext(const CircularQuadruple& quadruple) : q(quadruple) {}
};

// The omega-evaluation homomorphism: empty diagram -> 1, disjoint union ->
// product, wrapping -> omega, innermost first.
Vec eval_form(const CircularForm& u, EvalContext& ctx);

// Product of a region's contents: forms evaluated, elements resolved, each
// loop contributing omega of its interior's value.
Vec eval_contents(const Contents& c, EvalContext& ctx);

// Value of a fully closed decorated diagram (no boundary points).
Vec eval_decorated_closed(const DecoratedDiagram& d, EvalContext& ctx);
Vec eval_closure(const NestedClosure& n, EvalContext& ctx);

// alpha = eps composed with the evaluation.
Scalar alpha(const CircularForm& u, EvalContext& ctx);
Scalar alpha(const NestedClosure& n, EvalContext& ctx);

// alpha of the closure of x by the decorated outer diagram y; bilinear in
// the contents of both sides.
Scalar pair_general(const DecoratedDiagram& x, const DecoratedOuter& y, EvalContext& ctx);

// alpha(reflect(b) . a) for disk diagrams on the same 2k points. Refuses
// quadruples that are not R-spherical: symmetry of the form is unproven
// otherwise.
Scalar pair_spherical(const DecoratedDiagram& a, const DecoratedDiagram& b, EvalContext& ctx);

} // namespace pdcalc
