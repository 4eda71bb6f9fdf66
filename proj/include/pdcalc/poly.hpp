#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pdcalc/errors.hpp"
#include "pdcalc/rational.hpp"

namespace pdcalc {

// Ordered variable list, fixed per context (a quadruple's coefficient ring).
// Polynomials from different contexts must not be mixed.
using VarTable = std::shared_ptr<const std::vector<std::string>>;

inline VarTable make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

using ExpVec = std::vector<int>;

// Graded lexicographic: higher total degree first, lex on exponents to break ties.
struct GrlexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Q. Terms keyed by exponent vector,
// zero coefficients never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarTable vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarTable vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_[ExpVec(p.nvars(), 0)] = c;
        return p;
    }
    static MultiPoly variable(VarTable vars, std::size_t index, int power = 1) {
        MultiPoly p(vars);
        if (index >= p.nvars()) throw validation_error("variable index out of range");
        ExpVec e(p.nvars(), 0);
        e[index] = power;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    const VarTable& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                            [](int e) { return e == 0; }));
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw validation_error("polynomial is not constant");
        return terms_.begin()->second;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_context(o);
        if (!vars_ && o.vars_) vars_ = o.vars_;
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_context(b);
        MultiPoly r(a.vars_ ? a.vars_ : b.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    Rational c = ca * cb;
                    if (c != 0) r.terms_.emplace(std::move(e), std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // Exact division; throws if the divisor does not divide evenly.
    MultiPoly divide_exact(const MultiPoly& d) const {
        check_same_context(d);
        if (d.is_zero()) throw validation_error("polynomial division by zero");
        if (d.is_constant()) {
            MultiPoly q(*this);
            Rational inv = Rational(1) / d.constant_value();
            return q.scale(inv);
        }
        MultiPoly rem(*this), q(vars_ ? vars_ : d.vars_);
        const auto& [lde, ldc] = *d.terms_.begin();
        while (!rem.is_zero()) {
            const auto& [lre, lrc] = *rem.terms_.begin();
            ExpVec e(lre);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] -= lde[i];
                if (e[i] < 0) throw validation_error("inexact polynomial division");
            }
            MultiPoly t(q.vars_);
            t.terms_[std::move(e)] = lrc / ldc;
            q += t;
            rem -= t * d;
        }
        return q;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != nvars()) throw validation_error("evaluation point has wrong arity");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) t *= point[i];
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
            if (a != 1 || !has_var) out += to_string(a);
            bool need_star = a != 1 || !has_var;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) out += "*";
                need_star = true;
                out += (*vars_)[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    const std::map<ExpVec, Rational, GrlexGreater>& terms() const { return terms_; }

private:
    void check_same_context(const MultiPoly& o) const {
        if (vars_ && o.vars_ && vars_ != o.vars_ && *vars_ != *o.vars_)
            throw validation_error("mixing polynomials from different variable contexts");
        if (!terms_.empty() && !o.terms_.empty() && nvars() != o.nvars())
            throw validation_error("mixing polynomials of different arity");
    }

    VarTable vars_;
    std::map<ExpVec, Rational, GrlexGreater> terms_;
};

} // namespace pdcalc
