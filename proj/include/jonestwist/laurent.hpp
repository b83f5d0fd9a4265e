#pragma once

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "jonestwist/common.hpp"

namespace jt {

/// Sparse Laurent polynomial in one formal variable over arbitrary-precision
/// integers. Terms are kept sorted by exponent with no zero coefficients, so
/// equality is term-list equality.
class Laurent {
public:
    using Term = std::pair<int, Int>;

    explicit Laurent(Var v = Var::A) : var_(v) {}

    static Laurent zero(Var v) { return Laurent(v); }

    static Laurent constant(Var v, Int c) { return monomial(v, 0, std::move(c)); }

    static Laurent one(Var v) { return constant(v, 1); }

    static Laurent monomial(Var v, int exponent, Int c = 1) {
        Laurent f(v);
        if (c != 0) f.terms_.emplace_back(exponent, std::move(c));
        return f;
    }

    /// Builds from unsorted (exponent, coefficient) pairs, merging duplicates.
    static Laurent from_terms(Var v, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Laurent f(v);
        for (auto& [e, c] : terms) {
            if (c == 0) continue;
            if (!f.terms_.empty() && f.terms_.back().first == e) {
                f.terms_.back().second += c;
                if (f.terms_.back().second == 0) f.terms_.pop_back();
            } else {
                f.terms_.emplace_back(e, std::move(c));
            }
        }
        return f;
    }

    /// Dense ascending coefficients c[0..] for exponents low..low+size-1.
    static Laurent from_coeffs(Var v, int low, const std::vector<Int>& coeffs) {
        Laurent f(v);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) f.terms_.emplace_back(low + static_cast<int>(i), coeffs[i]);
        return f;
    }

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int low_exponent() const {
        require_nonzero();
        return terms_.front().first;
    }
    int high_exponent() const {
        require_nonzero();
        return terms_.back().first;
    }
    /// Difference of extreme exponents (the "span" of the polynomial).
    int span() const { return high_exponent() - low_exponent(); }

    const Int& leading_coeff() const {
        require_nonzero();
        return terms_.back().second;
    }

    Int coeff(int exponent) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) return it->second;
        return 0;
    }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

    bool operator==(const Laurent& o) const { return var_ == o.var_ && terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent operator-() const {
        Laurent r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        a.require_same_var(b);
        Laurent r(a.var_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                r.terms_.push_back(*ib++);
            } else {
                Int c = ia->second + ib->second;
                if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.require_same_var(b);
        if (a.is_zero() || b.is_zero()) return Laurent(a.var_);
        if (b.is_monomial()) return a.shifted(b.terms_[0].first, b.terms_[0].second);
        if (a.is_monomial()) return b.shifted(a.terms_[0].first, a.terms_[0].second);
        // Dense accumulation over the output exponent range.
        int low = a.low_exponent() + b.low_exponent();
        int high = a.high_exponent() + b.high_exponent();
        std::vector<Int> acc(static_cast<std::size_t>(high - low + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - low)] += ca * cb;
        return from_coeffs(a.var_, low, acc);
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /// Multiply by c * var^shift in place.
    Laurent shifted(int shift, const Int& c = 1) const {
        if (c == 0) return Laurent(var_);
        Laurent r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, k] : terms_) r.terms_.emplace_back(e + shift, k * c);
        return r;
    }

    Laurent pow(int k) const {
        if (k < 0) throw Error(errc::undefined_value, "negative power of a polynomial");
        Laurent r = one(var_);
        Laurent base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    /// Exact division in the Laurent ring; throws non-exact-division when g
    /// does not divide exactly (never truncates silently).
    static Laurent exact_divide(const Laurent& f, const Laurent& g) {
        f.require_same_var(g);
        if (g.is_zero()) throw Error(errc::zero_input, "division by zero polynomial");
        if (f.is_zero()) return Laurent(f.var_);
        // Strip monomial factors: units of the Laurent ring.
        const int gshift = g.low_exponent();
        const int fshift = f.low_exponent();
        std::vector<Int> num = f.dense_coeffs();
        std::vector<Int> den = g.dense_coeffs();
        if (num.size() < den.size())
            throw Error(errc::non_exact_division, "degree of divisor exceeds dividend");
        std::vector<Int> q(num.size() - den.size() + 1);
        for (std::size_t i = q.size(); i-- > 0;) {
            Int& head = num[i + den.size() - 1];
            if (head == 0) continue;
            if (head % den.back() != 0)
                throw Error(errc::non_exact_division, "leading coefficient does not divide");
            Int t = head / den.back();
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= t * den[j];
            q[i] = std::move(t);
        }
        for (const Int& c : num)
            if (c != 0) throw Error(errc::non_exact_division, "nonzero remainder");
        return from_coeffs(f.var_, fshift - gshift, q);
    }

    struct Normalized;

    /// Strips the unit +-var^k so that the result has lowest exponent 0 and
    /// positive first coefficient. sign * var^exponent * poly reconstructs
    /// the input exactly. This realizes the =. ("dot-equal") normal form.
    Normalized normalize_up_to_unit() const;

    /// Substitutes var -> var^power (power nonzero, negative allowed).
    Laurent substitute_power(int power) const {
        if (power == 0) throw Error(errc::undefined_value, "substitution power must be nonzero");
        Laurent r(var_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.emplace_back(e * power, c);
        if (power < 0) std::reverse(r.terms_.begin(), r.terms_.end());
        return r;
    }

    /// var -> var^-1.
    Laurent mirror() const { return substitute_power(-1); }

    /// Reinterprets the polynomial in another variable, exponents scaled by
    /// `power`. Throws unless every exponent is divisible when power is given
    /// as a reciprocal step (use for A^-4 = t: rebase(Var::t, -4)).
    Laurent rebase(Var target, int source_exponents_per_target) const {
        int step = source_exponents_per_target;
        if (step == 0) throw Error(errc::undefined_value, "zero exponent step");
        Laurent r(target);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            if (e % step != 0)
                throw Error(errc::variable_mismatch, "exponent not divisible in variable rebase");
            r.terms_.emplace_back(e / step, c);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return r;
    }

    std::complex<double> evaluate(std::complex<double> z) const {
        if (std::abs(z) == 0.0 && !is_zero() && low_exponent() < 0)
            throw Error(errc::undefined_value, "evaluation at 0 with negative exponents");
        std::complex<double> acc(0.0, 0.0);
        // Horner over the dense range, anchored at the low exponent.
        if (is_zero()) return acc;
        for (auto it = terms_.rbegin(); it != terms_.rend();) {
            int e = it->first;
            acc += static_cast<double>(it->second);
            ++it;
            int next = (it == terms_.rend()) ? low_exponent() : it->first;
            for (int k = e; k > next; --k) acc *= z;
        }
        return acc * std::pow(z, low_exponent());
    }

    Int l1_norm() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += abs(c);
        return s;
    }

    /// Dense ascending coefficient vector starting at the lowest exponent.
    std::vector<Int> dense_coeffs() const {
        if (is_zero()) return {};
        std::vector<Int> v(static_cast<std::size_t>(span() + 1));
        int low = low_exponent();
        for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - low)] = c;
        return v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = abs(c);
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var_name(var_);
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw Error(errc::zero_input, "zero polynomial has no exponents");
    }
    void require_same_var(const Laurent& o) const {
        if (var_ != o.var_)
            throw Error(errc::variable_mismatch, std::string("cannot combine ") + var_name(var_) +
                                                     " with " + var_name(o.var_));
    }

    Var var_;
    std::vector<Term> terms_;
};

struct Laurent::Normalized {
    Laurent poly;  ///< lowest exponent 0, lowest coefficient positive
    int exponent;  ///< extracted monomial var^exponent
    int sign;      ///< extracted sign, +1 or -1
};

inline Laurent::Normalized Laurent::normalize_up_to_unit() const {
    if (is_zero()) throw Error(errc::zero_input, "cannot normalize the zero polynomial");
    int k = low_exponent();
    int s = terms_.front().second > 0 ? 1 : -1;
    Laurent p(var_);
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) p.terms_.emplace_back(e - k, s > 0 ? c : -c);
    return {std::move(p), k, s};
}

/// The loop value delta = -A^2 - A^-2.
inline Laurent delta_poly() {
    return Laurent::from_terms(Var::A, {{2, -1}, {-2, -1}});
}

/// Converts a polynomial in A whose exponents are all multiples of 4 into the
/// t variable via t = A^-4.
inline Laurent a_to_t(const Laurent& f) {
    return f.rebase(Var::t, -4);
}

/// Converts a polynomial in t to the A variable via t = A^-4.
inline Laurent t_to_a(const Laurent& f) {
    Laurent r(Var::A);
    std::vector<Laurent::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) terms.emplace_back(-4 * e, c);
    return Laurent::from_terms(Var::A, std::move(terms));
}

/// Dot-equal comparison: equality up to sign and a monomial, optionally also
/// allowing reversal (mirror), which table comparisons permit.
inline bool dot_equal(const Laurent& f, const Laurent& g, bool allow_reversal = false) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero();
    Laurent nf = f.normalize_up_to_unit().poly;
    Laurent ng = g.normalize_up_to_unit().poly;
    if (nf.var() != ng.var()) return false;
    if (nf == ng) return true;
    if (!allow_reversal) return false;
    return nf == ng.mirror().normalize_up_to_unit().poly;
}

/// Greatest common divisor in the Laurent ring, normalized to lowest exponent
/// 0 with positive lowest coefficient. Primitive Euclidean algorithm with
/// pseudo-division; degrees in this project stay small.
inline Laurent laurent_gcd(const Laurent& f, const Laurent& g) {
    if (f.is_zero() && g.is_zero()) throw Error(errc::zero_input, "gcd(0, 0)");
    if (f.var() != g.var()) throw Error(errc::variable_mismatch, "gcd across variables");
    auto content = [](const std::vector<Int>& v) {
        Int c = 0;
        for (const Int& x : v) c = gcd(c, x);
        return c;
    };
    auto primitive = [&](std::vector<Int> v) {
        Int c = content(v);
        if (c > 1)
            for (Int& x : v) x /= c;
        return v;
    };
    auto trim = [](std::vector<Int>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    if (f.is_zero() || g.is_zero()) {
        const Laurent& h = f.is_zero() ? g : f;
        return Laurent::from_coeffs(h.var(), 0, primitive(h.dense_coeffs()))
            .normalize_up_to_unit()
            .poly;
    }
    Int cont = gcd(content(f.dense_coeffs()), content(g.dense_coeffs()));
    std::vector<Int> a = primitive(f.dense_coeffs());
    std::vector<Int> b = primitive(g.dense_coeffs());
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // Pseudo-remainder of a modulo b.
        std::vector<Int> r = a;
        while (r.size() >= b.size()) {
            Int head = r.back();
            std::size_t shift = r.size() - b.size();
            if (head != 0) {
                const Int& lead = b.back();
                for (Int& x : r) x *= lead;
                for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= head * b[j];
            }
            r.pop_back();
            trim(r);
        }
        a = std::move(b);
        b = primitive(std::move(r));
    }
    Laurent result = Laurent::from_coeffs(f.var(), 0, a).normalize_up_to_unit().poly;
    if (cont > 1) result = result.shifted(0, cont);
    return result;
}

}  // namespace jt
