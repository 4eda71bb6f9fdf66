#pragma once

#include <variant>

#include "pdcalc/poly.hpp"

namespace pdcalc {

// Exact scalar: a rational number or a sparse multivariate polynomial.
// No floating point anywhere in this library.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(MultiPoly p) : v_(std::move(p)) { demote(); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const {
        return is_rational() ? std::get<Rational>(v_) == 0 : std::get<MultiPoly>(v_).is_zero();
    }
    const Rational& as_rational() const {
        if (!is_rational()) throw validation_error("scalar is not rational: " + str());
        return std::get<Rational>(v_);
    }
    const MultiPoly& as_poly() const { return std::get<MultiPoly>(v_); }

    MultiPoly promote(const VarTable& vars) const {
        if (is_rational()) return MultiPoly::constant(vars, std::get<Rational>(v_));
        return std::get<MultiPoly>(v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.as_rational() + b.as_rational());
        const VarTable& vt = a.is_rational() ? b.as_poly().vars() : a.as_poly().vars();
        return Scalar(a.promote(vt) + b.promote(vt));
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.as_rational() - b.as_rational());
        const VarTable& vt = a.is_rational() ? b.as_poly().vars() : a.as_poly().vars();
        return Scalar(a.promote(vt) - b.promote(vt));
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.as_rational() * b.as_rational());
        if (a.is_zero() || b.is_zero()) return Scalar(0);
        const VarTable& vt = a.is_rational() ? b.as_poly().vars() : a.as_poly().vars();
        return Scalar(a.promote(vt) * b.promote(vt));
    }
    Scalar operator-() const { return Scalar(0) - *this; }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Exact division, used by fraction-free elimination.
    Scalar divide_exact(const Scalar& d) const {
        if (d.is_zero()) throw validation_error("scalar division by zero");
        if (is_rational() && d.is_rational()) return Scalar(as_rational() / d.as_rational());
        const VarTable& vt = is_rational() ? d.as_poly().vars() : as_poly().vars();
        return Scalar(promote(vt).divide_exact(d.promote(vt)));
    }

    bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Rational evaluate(const std::vector<Rational>& point) const {
        return is_rational() ? as_rational() : as_poly().evaluate(point);
    }

    std::string str() const {
        return is_rational() ? to_string(as_rational()) : as_poly().str();
    }

private:
    // Keep constants in the fast representation.
    void demote() {
        if (!is_rational() && std::get<MultiPoly>(v_).is_constant())
            v_ = std::get<MultiPoly>(v_).constant_value();
    }

    std::variant<Rational, MultiPoly> v_;
};

} // namespace pdcalc
