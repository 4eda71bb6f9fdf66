#include "pdcalc/algebra.hpp"

#include <algorithm>

namespace pdcalc {

Vec CommAlgebra::basis(int i) const {
    Vec v = zero();
    v[i] = Scalar(1);
    return v;
}

Vec CommAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec out = zero();
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (int l = 0; l < dim; ++l)
                if (!mult[i][j][l].is_zero()) out[l] += c * mult[i][j][l];
        }
    }
    return out;
}

Vec CommAlgebra::scale(const Scalar& c, const Vec& v) const {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

Vec CommAlgebra::add(const Vec& a, const Vec& b) const {
    Vec out = a;
    for (int i = 0; i < dim; ++i) out[i] += b[i];
    return out;
}

Vec CircularQuadruple::apply_omega(const Vec& v) const {
    Vec out(algebra.dim, Scalar(0));
    for (int j = 0; j < algebra.dim; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < algebra.dim; ++i)
            if (!omega[i][j].is_zero()) out[i] += omega[i][j] * v[j];
    }
    return out;
}

Scalar CircularQuadruple::apply_trace(const Vec& v) const {
    Scalar out(0);
    for (int i = 0; i < algebra.dim; ++i) out += trace[i] * v[i];
    return out;
}

CircularQuadruple CircularQuadruple::specialize(const std::vector<Rational>& point) const {
    auto ev = [&](const Scalar& s) { return Scalar(s.evaluate(point)); };
    CircularQuadruple out;
    out.algebra.dim = algebra.dim;
    out.algebra.basis_names = algebra.basis_names;
    out.algebra.idempotent_basis = algebra.idempotent_basis;
    for (const auto& s : algebra.unit) out.algebra.unit.push_back(ev(s));
    out.algebra.mult.resize(algebra.dim);
    for (int i = 0; i < algebra.dim; ++i)
        for (int j = 0; j < algebra.dim; ++j) {
            Vec v;
            for (const auto& s : algebra.mult[i][j]) v.push_back(ev(s));
            out.algebra.mult[i].push_back(std::move(v));
        }
    for (const auto& row : omega) {
        Vec v;
        for (const auto& s : row) v.push_back(ev(s));
        out.omega.push_back(std::move(v));
    }
    for (const auto& s : trace) out.trace.push_back(ev(s));
    out.name = name + "@point";
    annotate_spherical_flags(out);
    return out;
}

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass && c.axiom != "z_spherical" && c.axiom != "r_spherical") return false;
    return true;
}

uint64_t RationalSampler::raw() {
    // splitmix64: fully specified, identical on every platform
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rational RationalSampler::nonzero() {
    uint64_t v = raw() % (uint64_t(1) << 32);
    Rational r(Int(v + 1));
    return (raw() & 1) ? r : -r;
}

namespace {

// Degree-2 monomial's variable indices, or empty if not of that shape.
std::vector<std::size_t> monomial_vars(const Scalar& s) {
    if (s.is_rational()) return {};
    const auto& p = s.as_poly();
    if (p.term_count() != 1) return {};
    const auto& [e, c] = *p.terms().begin();
    if (c != 1) return {};
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] > 1) return {};
        out.push_back(i);
    }
    return out;
}

} // namespace

std::vector<Rational> sample_point(const CircularQuadruple& q, RationalSampler& rng) {
    if (!q.vars) return {};
    const auto& names = *q.vars;
    std::vector<Rational> point(names.size());
    std::vector<bool> derived(names.size(), false);

    struct Solved {
        std::size_t var, lhs_a, lhs_b, rhs_other;
    };
    std::vector<Solved> plan;
    for (const auto& [lhs, rhs] : q.constraints) {
        auto lv = monomial_vars(lhs), rv = monomial_vars(rhs);
        if (lv.size() != 2 || rv.size() != 2)
            throw validation_error("constraint is not a pair of degree-2 monomials");
        // solve for the rhs variable that is not a trace parameter
        std::size_t solved = rv[0], other = rv[1];
        if (names[solved].starts_with("b")) std::swap(solved, other);
        derived[solved] = true;
        plan.push_back({solved, lv[0], lv[1], other});
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!derived[i]) point[i] = rng.nonzero();
    for (const auto& p : plan)
        point[p.var] = point[p.lhs_a] * point[p.lhs_b] / point[p.rhs_other];
    return point;
}

bool identity_check_on_variety(const Scalar& lhs, const Scalar& rhs, const CircularQuadruple& q,
                               uint64_t seed, int trials) {
    RationalSampler rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto point = sample_point(q, rng);
        if (lhs.evaluate(point) != rhs.evaluate(point)) return false;
    }
    return true;
}

namespace {

// Equality of two scalars, either exactly or (for symbolic quadruples with
// constraints) on the constraint variety.
bool scalars_agree(const Scalar& a, const Scalar& b, const CircularQuadruple& q, uint64_t seed,
                   bool& used_variety) {
    if (a == b) return true;
    if (q.symbolic() && !q.constraints.empty() && identity_check_on_variety(a, b, q, seed)) {
        used_variety = true;
        return true;
    }
    return false;
}

} // namespace

ValidationReport validate_quadruple(const CircularQuadruple& q, uint64_t seed) {
    const auto& A = q.algebra;
    const int d = A.dim;
    if (d <= 0) throw validation_error("algebra dimension must be positive");
    if (static_cast<int>(A.unit.size()) != d || static_cast<int>(q.trace.size()) != d ||
        static_cast<int>(A.mult.size()) != d || static_cast<int>(q.omega.size()) != d)
        throw validation_error("quadruple tensors have mismatched shapes");
    for (const auto& row : A.mult) {
        if (static_cast<int>(row.size()) != d)
            throw validation_error("structure tensor has mismatched shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != d)
                throw validation_error("structure tensor has mismatched shape");
    }
    for (const auto& row : q.omega)
        if (static_cast<int>(row.size()) != d)
            throw validation_error("omega matrix has mismatched shape");

    ValidationReport rep;
    auto record = [&](const std::string& axiom, bool pass, bool modulo, const std::string& detail) {
        rep.checks.push_back({axiom, pass, modulo, detail});
        return pass;
    };
    bool modulo = false;

    bool comm = true;
    std::string where;
    for (int i = 0; i < d && comm; ++i)
        for (int j = 0; j < d && comm; ++j)
            for (int l = 0; l < d && comm; ++l)
                if (!scalars_agree(A.mult[i][j][l], A.mult[j][i][l], q, seed, modulo)) {
                    comm = false;
                    where = "e" + std::to_string(i) + "*e" + std::to_string(j);
                }
    rep.commutative = record("commutative", comm, modulo, where);

    modulo = false;
    bool assoc = true;
    where.clear();
    for (int i = 0; i < d && assoc; ++i)
        for (int j = 0; j < d && assoc; ++j)
            for (int l = 0; l < d && assoc; ++l) {
                Vec left = A.multiply(A.multiply(A.basis(i), A.basis(j)), A.basis(l));
                Vec right = A.multiply(A.basis(i), A.multiply(A.basis(j), A.basis(l)));
                for (int t = 0; t < d; ++t)
                    if (!scalars_agree(left[t], right[t], q, seed, modulo)) {
                        assoc = false;
                        where = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(l) + ")";
                        break;
                    }
                if (!assoc) break;
            }
    rep.associative = record("associative", assoc, modulo, where);

    modulo = false;
    bool unital = true;
    for (int i = 0; i < d && unital; ++i) {
        Vec prod = A.multiply(A.unit, A.basis(i));
        for (int t = 0; t < d; ++t)
            if (!scalars_agree(prod[t], A.basis(i)[t], q, seed, modulo)) {
                unital = false;
                break;
            }
    }
    rep.unital = record("unital", unital, modulo, "");

    if (A.idempotent_basis) {
        modulo = false;
        bool idem = true;
        for (int i = 0; i < d && idem; ++i)
            for (int j = 0; j < d && idem; ++j) {
                Vec prod = A.multiply(A.basis(i), A.basis(j));
                Vec expect = i == j ? A.basis(i) : A.zero();
                for (int t = 0; t < d; ++t)
                    if (!scalars_agree(prod[t], expect[t], q, seed, modulo)) {
                        idem = false;
                        break;
                    }
            }
        rep.idempotent_ok = record("idempotent_basis", idem, modulo, "");
    }

    // Z-spherical: omega(e_j) = e_j * omega(1) for every basis element
    modulo = false;
    bool zs = true;
    Vec omega1 = q.apply_omega(A.unit);
    for (int j = 0; j < d && zs; ++j) {
        Vec lhs = q.apply_omega(A.basis(j));
        Vec rhs = A.multiply(A.basis(j), omega1);
        for (int t = 0; t < d; ++t)
            if (!scalars_agree(lhs[t], rhs[t], q, seed, modulo)) {
                zs = false;
                break;
            }
    }
    rep.z_spherical = record("z_spherical", zs, modulo, "");

    // R-spherical: S_ij = eps(e_i * omega(e_j)) is symmetric
    modulo = false;
    bool rs = true;
    for (int i = 0; i < d && rs; ++i)
        for (int j = i + 1; j < d && rs; ++j) {
            Scalar sij = q.apply_trace(A.multiply(A.basis(i), q.apply_omega(A.basis(j))));
            Scalar sji = q.apply_trace(A.multiply(A.basis(j), q.apply_omega(A.basis(i))));
            if (!scalars_agree(sij, sji, q, seed, modulo)) rs = false;
        }
    rep.r_spherical = record("r_spherical", rs, modulo, "");

    bool eps_nonzero = false;
    for (const auto& s : q.trace)
        if (!s.is_zero()) eps_nonzero = true;
    rep.trace_nonzero = record("trace_nonzero", eps_nonzero, false, "");

    return rep;
}

void annotate_spherical_flags(CircularQuadruple& q, uint64_t seed) {
    auto rep = validate_quadruple(q, seed);
    if (!rep.commutative || !rep.associative || !rep.unital || !rep.idempotent_ok)
        throw validation_error("quadruple '" + q.name + "' violates algebra axioms");
    q.z_spherical = rep.z_spherical;
    q.r_spherical = rep.r_spherical;
}

namespace {

// Row-reduced basis of a subspace of Q^n with unit pivots.
class EchelonBasis {
public:
    explicit EchelonBasis(int n) : n_(n) {}

    bool insert(std::vector<Rational> v) {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        for (auto& row : rows_)
            if (row[p] != 0) {
                Rational f = row[p];
                for (int i = 0; i < n_; ++i) row[i] -= f * v[i];
            }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::optional<std::vector<Rational>> coords(std::vector<Rational> v) const {
        std::vector<Rational> c(rows_.size(), 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v[pivots_[r]] == 0) continue;
            c[r] = v[pivots_[r]];
            for (int i = 0; i < n_; ++i) v[i] -= c[r] * rows_[r][i];
        }
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return c;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    void reduce(std::vector<Rational>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v[pivots_[r]] == 0) continue;
            Rational f = v[pivots_[r]];
            for (int i = 0; i < n_; ++i) v[i] -= f * rows_[r][i];
        }
    }
    static int pivot_of(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }

    int n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

std::vector<Rational> to_rational(const Vec& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.as_rational());
    return out;
}

Vec to_vec(const std::vector<Rational>& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(Scalar(r));
    return out;
}

} // namespace

OmegaSubalgebra omega_generated_subalgebra(const CircularQuadruple& q) {
    if (q.symbolic())
        throw validation_error("omega_generated_subalgebra needs a numeric quadruple");
    const int d = q.dim();
    EchelonBasis basis(d);
    basis.insert(to_rational(q.algebra.unit));
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = basis.rows();
        for (const auto& r : snapshot)
            if (basis.insert(to_rational(q.apply_omega(to_vec(r))))) grew = true;
        for (const auto& r1 : snapshot)
            for (const auto& r2 : snapshot)
                if (basis.insert(to_rational(q.algebra.multiply(to_vec(r1), to_vec(r2)))))
                    grew = true;
    }
    OmegaSubalgebra out;
    out.dim = basis.dim();
    for (const auto& r : basis.rows()) out.basis.push_back(to_vec(r));
    out.surjective = out.dim == d;
    return out;
}

PairingRadical pairing_radical(const CircularQuadruple& q) {
    PairingRadical out;
    out.zprime = omega_generated_subalgebra(q);
    const int d = out.zprime.dim;
    const auto& B = out.zprime.basis;

    EchelonBasis ambient(q.dim());
    for (const auto& b : B) ambient.insert(to_rational(b));
    auto zcoords = [&](const Vec& v) {
        auto c = ambient.coords(to_rational(v));
        if (!c) throw validation_error("Z' is not closed under the requested operation");
        return *c;
    };

    // functionals as row vectors over Z' coordinates
    EchelonBasis funcs(d);
    std::vector<std::vector<Rational>> queue;
    for (int z = 0; z < d; ++z) {
        std::vector<Rational> f(d);
        for (int i = 0; i < d; ++i)
            f[i] = q.apply_trace(q.algebra.multiply(B[z], B[i])).as_rational();
        if (funcs.insert(f)) queue.push_back(funcs.rows().back());
    }
    // close under f -> f(omega(z * .)) for z running over the Z' basis
    while (!queue.empty()) {
        auto f = queue.back();
        queue.pop_back();
        for (int z = 0; z < d; ++z) {
            std::vector<Rational> g(d, 0);
            for (int i = 0; i < d; ++i) {
                auto w = zcoords(q.apply_omega(q.algebra.multiply(B[z], B[i])));
                for (int t = 0; t < d; ++t) g[i] += f[t] * w[t];
            }
            if (funcs.insert(g)) queue.push_back(g);
        }
    }
    out.functionals = funcs.rows();

    Mat<Rational> fm = funcs.rows();
    RankKernel<Rational> rk;
    if (fm.empty()) {
        rk.rank = 0;
        for (int i = 0; i < d; ++i) {
            std::vector<Rational> e(d, 0);
            e[i] = 1;
            rk.kernel_basis.push_back(e);
        }
    } else {
        rk = rank_kernel(fm, d);
    }
    out.radical_dim = static_cast<int>(rk.kernel_basis.size());
    out.a0_dim = d - out.radical_dim;
    for (const auto& kv : rk.kernel_basis) {
        Vec ambient_vec(q.dim(), Scalar(0));
        for (int t = 0; t < d; ++t)
            for (int i = 0; i < q.dim(); ++i) ambient_vec[i] += Scalar(kv[t]) * B[t][i];
        out.radical_basis.push_back(std::move(ambient_vec));
    }
    return out;
}

} // namespace pdcalc
