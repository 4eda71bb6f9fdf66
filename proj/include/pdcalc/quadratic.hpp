#pragma once

#include <string>

#include "pdcalc/rational.hpp"

namespace pdcalc {

// Element a + b*sqrt(disc) of the quadratic field Q(sqrt(disc)); disc is a fixed
// nonsquare rational carried by every element. Keeps root-of-unity circle values
// like sqrt(2) and the golden ratio exact.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), disc_(0) {}
    QuadExt(Rational a, Rational b, Rational disc)
        : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {}
    static QuadExt rational(const Rational& a, const Rational& disc) { return {a, 0, disc}; }
    static QuadExt root(const Rational& disc) { return {0, 1, disc}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& disc() const { return disc_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, x.pick(y)};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a_ - y.a_, x.b_ - y.b_, x.pick(y)};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational d = x.pick(y);
        return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
    }
    QuadExt inverse() const {
        Rational norm = a_ * a_ - b_ * b_ * disc_;
        if (norm == 0) throw validation_error("inverse of zero (or non-field disc) in QuadExt");
        return {a_ / norm, -b_ / norm, disc_};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt operator-() const { return {-a_, -b_, disc_}; }
    bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_; }

    QuadExt pow(unsigned n) const {
        QuadExt r = rational(1, disc_), base = *this;
        for (; n; n >>= 1) {
            if (n & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    std::string str() const {
        return "(" + to_string(a_) + " + " + to_string(b_) + "*sqrt(" + to_string(disc_) + "))";
    }

private:
    // Zero-valued elements may carry disc 0 from the default constructor.
    Rational pick(const QuadExt& o) const { return disc_ != 0 ? disc_ : o.disc_; }

    Rational a_, b_, disc_;
};

} // namespace pdcalc
