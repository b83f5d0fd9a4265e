#pragma once

#include <utility>

#include "jonestwist/laurent.hpp"

namespace jt {

/// Reduced quotient of two Laurent polynomials in one variable. Needed to
/// carry interpolated pairing values exactly; the idempotent traces live in
/// (1/delta) Z[delta], for example. Invariants: denominator nonzero, the
/// fraction is reduced, the denominator has lowest exponent 0 and positive
/// leading coefficient.
class Rational {
public:
    explicit Rational(Var v = Var::A)
        : num_(Laurent::zero(v)), den_(Laurent::one(v)) {}

    Rational(Laurent numerator, Laurent denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw Error(errc::zero_input, "zero denominator");
        if (num_.var() != den_.var())
            throw Error(errc::variable_mismatch, "numerator and denominator variables differ");
        reduce();
    }

    static Rational from_poly(Laurent p) {
        Rational r(p.var());
        r.num_ = std::move(p);
        return r;
    }

    static Rational zero(Var v) { return Rational(v); }
    static Rational one(Var v) { return from_poly(Laurent::one(v)); }

    const Laurent& numerator() const { return num_; }
    const Laurent& denominator() const { return den_; }
    Var var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }

    bool is_polynomial() const { return den_.is_one(); }

    /// The underlying polynomial; throws unless the denominator is 1.
    const Laurent& as_poly() const {
        if (!is_polynomial()) throw Error(errc::non_exact_division, "denominator is not a unit");
        return num_;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    Rational operator-() const {
        Rational r(var());
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error(errc::zero_input, "division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Laurent::one(den_.var());
            return;
        }
        Laurent g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Laurent::exact_divide(num_, g);
            den_ = Laurent::exact_divide(den_, g);
        }
        // Also cancel the shared integer content.
        Int cn = 0, cd = 0;
        for (const auto& [e, c] : num_.terms()) cn = gcd(cn, c);
        for (const auto& [e, c] : den_.terms()) cd = gcd(cd, c);
        Int cg = gcd(cn, cd);
        if (cg > 1) {
            num_ = Laurent::exact_divide(num_, Laurent::constant(num_.var(), cg));
            den_ = Laurent::exact_divide(den_, Laurent::constant(den_.var(), cg));
        }
        // Make the denominator a canonical representative: lowest exponent 0,
        // positive leading coefficient; fold the extracted unit into the
        // numerator.
        auto dn = den_.normalize_up_to_unit();
        den_ = dn.poly;
        num_ = num_.shifted(-dn.exponent, dn.sign);
        if (den_.leading_coeff() < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }

    Laurent num_;
    Laurent den_;
};

}  // namespace jt
