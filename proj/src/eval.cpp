#include "pdcalc/eval.hpp"

namespace pdcalc {

namespace {

// Value of one canonical tree encoding "(...)" = omega(value of the inside).
Vec eval_tree(const std::string& enc, EvalContext& ctx) {
    auto it = ctx.memo.find(enc);
    if (it != ctx.memo.end()) return it->second;
    Vec inner = ctx.q.algebra.unit;
    // children are the top-level groups of the encoding's interior
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 1; i + 1 < enc.size(); ++i) {
        if (enc[i] == '(') {
            if (depth == 0) start = i;
            ++depth;
        } else {
            --depth;
            if (depth == 0)
                inner = ctx.q.algebra.multiply(
                    inner, eval_tree(enc.substr(start, i - start + 1), ctx));
        }
    }
    Vec out = ctx.q.apply_omega(inner);
    ctx.memo.emplace(enc, out);
    return out;
}

Vec resolve_elem(const ElemRef& e, EvalContext& ctx) {
    if (e.is_basis()) {
        if (e.basis >= ctx.q.dim())
            throw validation_error("basis index " + std::to_string(e.basis) +
                                   " out of range for dim " + std::to_string(ctx.q.dim()));
        return ctx.q.algebra.basis(e.basis);
    }
    if (static_cast<int>(e.coords.size()) != ctx.q.dim())
        throw validation_error("element coordinate vector has wrong dimension");
    return e.coords;
}

} // namespace

Vec eval_form(const CircularForm& u, EvalContext& ctx) {
    Vec out = ctx.q.algebra.unit;
    for (const auto& t : u.trees()) out = ctx.q.algebra.multiply(out, eval_tree(t, ctx));
    return out;
}

Vec eval_contents(const Contents& c, EvalContext& ctx) {
    Vec out = eval_form(c.form, ctx);
    for (const auto& e : c.elems) out = ctx.q.algebra.multiply(out, resolve_elem(e, ctx));
    for (const auto& l : c.loops)
        out = ctx.q.algebra.multiply(out, ctx.q.apply_omega(eval_contents(l.inside, ctx)));
    return out;
}

Vec eval_decorated_closed(const DecoratedDiagram& d, EvalContext& ctx) {
    if (d.matching.points() != 0)
        throw validation_error("eval_decorated_closed requires a closed diagram");
    const Contents* c = d.region(1);
    return c ? eval_contents(*c, ctx) : ctx.q.algebra.unit;
}

Vec eval_closure(const NestedClosure& n, EvalContext& ctx) { return eval_contents(n.root, ctx); }

Scalar alpha(const CircularForm& u, EvalContext& ctx) {
    return ctx.q.apply_trace(eval_form(u, ctx));
}

Scalar alpha(const NestedClosure& n, EvalContext& ctx) {
    return ctx.q.apply_trace(eval_closure(n, ctx));
}

Scalar pair_general(const DecoratedDiagram& x, const DecoratedOuter& y, EvalContext& ctx) {
    return alpha(glue_disk_outer(x, y), ctx);
}

Scalar pair_spherical(const DecoratedDiagram& a, const DecoratedDiagram& b, EvalContext& ctx) {
    if (!ctx.q.r_spherical)
        throw refusal_error("pair_spherical requires an R-spherical quadruple; '" + ctx.q.name +
                            "' is not");
    if (a.matching.points() != b.matching.points())
        throw validation_error("pair_spherical arity mismatch");
    DecoratedDiagram top = reflect(b);
    return ctx.q.apply_trace(eval_decorated_closed(compose(top, a), ctx));
}

} // namespace pdcalc
