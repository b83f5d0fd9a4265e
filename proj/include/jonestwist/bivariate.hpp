#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "jonestwist/laurent.hpp"

namespace jt {

/// Sparse polynomial in two variables (typically (A, x) or (t, x)) over
/// arbitrary-precision integers. Terms are sorted lexicographically by
/// exponent pair; no zero coefficients are stored.
class Bivariate {
public:
    using Exps = std::pair<int, int>;
    using Term = std::pair<Exps, Int>;

    Bivariate(Var v1 = Var::t, Var v2 = Var::x) : v1_(v1), v2_(v2) {}

    static Bivariate zero(Var v1, Var v2) { return Bivariate(v1, v2); }

    static Bivariate monomial(Var v1, Var v2, int e1, int e2, Int c = 1) {
        Bivariate f(v1, v2);
        if (c != 0) f.terms_.push_back({{e1, e2}, std::move(c)});
        return f;
    }

    static Bivariate from_terms(Var v1, Var v2, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Bivariate f(v1, v2);
        for (auto& [e, c] : terms) {
            if (c == 0) continue;
            if (!f.terms_.empty() && f.terms_.back().first == e) {
                f.terms_.back().second += c;
                if (f.terms_.back().second == 0) f.terms_.pop_back();
            } else {
                f.terms_.push_back({e, std::move(c)});
            }
        }
        return f;
    }

    /// Embeds a univariate polynomial as the first variable.
    static Bivariate lift(const Laurent& f, Var second) {
        Bivariate r(f.var(), second);
        for (const auto& [e, c] : f.terms()) r.terms_.push_back({{e, 0}, c});
        return r;
    }

    Var var1() const { return v1_; }
    Var var2() const { return v2_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Bivariate& o) const {
        return v1_ == o.v1_ && v2_ == o.v2_ && terms_ == o.terms_;
    }
    bool operator!=(const Bivariate& o) const { return !(*this == o); }

    Bivariate operator-() const {
        Bivariate r(v1_, v2_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) r.terms_.push_back({e, -c});
        return r;
    }

    friend Bivariate operator+(const Bivariate& a, const Bivariate& b) {
        a.require_same_vars(b);
        std::vector<Term> t;
        t.reserve(a.terms_.size() + b.terms_.size());
        t.insert(t.end(), a.terms_.begin(), a.terms_.end());
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        return from_terms(a.v1_, a.v2_, std::move(t));
    }

    friend Bivariate operator-(const Bivariate& a, const Bivariate& b) { return a + (-b); }

    friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
        a.require_same_vars(b);
        std::map<Exps, Int> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                acc[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        Bivariate r(a.v1_, a.v2_);
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    Bivariate& operator+=(const Bivariate& o) { return *this = *this + o; }
    Bivariate& operator-=(const Bivariate& o) { return *this = *this - o; }
    Bivariate& operator*=(const Bivariate& o) { return *this = *this * o; }

    /// Substitutes second variable -> (first variable)^power, collapsing to a
    /// univariate polynomial in the first variable.
    Laurent collapse_second(int power) const {
        std::vector<Laurent::Term> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(e.first + power * e.second, c);
        return Laurent::from_terms(v1_, std::move(out));
    }

    /// Substitutes per-variable powers v1 -> v1^p1, v2 -> v2^p2.
    Bivariate substitute_powers(int p1, int p2) const {
        if (p1 == 0 || p2 == 0) throw Error(errc::undefined_value, "substitution power must be nonzero");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.push_back({{e.first * p1, e.second * p2}, c});
        return from_terms(v1_, v2_, std::move(out));
    }

    /// Sets the second variable to the constant 1.
    Laurent set_second_to_one() const { return collapse_second(0); }

    std::complex<double> evaluate(std::complex<double> z1, std::complex<double> z2) const {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : terms_)
            acc += static_cast<double>(c) * std::pow(z1, static_cast<double>(e.first)) *
                   std::pow(z2, static_cast<double>(e.second));
        return acc;
    }

    Int l1_norm() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += abs(c);
        return s;
    }

    int min_exp1() const { return extreme(true, true); }
    int max_exp1() const { return extreme(true, false); }
    int min_exp2() const { return extreme(false, true); }
    int max_exp2() const { return extreme(false, false); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = abs(c);
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            bool wrote = false;
            if (a != 1 || (e.first == 0 && e.second == 0)) {
                os << a.str();
                wrote = true;
            }
            if (e.first != 0) {
                if (wrote) os << "*";
                os << var_name(v1_);
                if (e.first != 1) os << "^" << e.first;
                wrote = true;
            }
            if (e.second != 0) {
                if (wrote) os << "*";
                os << var_name(v2_);
                if (e.second != 1) os << "^" << e.second;
            }
        }
        return os.str();
    }

private:
    int extreme(bool first_var, bool min) const {
        if (is_zero()) throw Error(errc::zero_input, "zero polynomial has no exponents");
        int best = first_var ? terms_[0].first.first : terms_[0].first.second;
        for (const auto& [e, c] : terms_) {
            int v = first_var ? e.first : e.second;
            best = min ? std::min(best, v) : std::max(best, v);
        }
        return best;
    }

    void require_same_vars(const Bivariate& o) const {
        if (v1_ != o.v1_ || v2_ != o.v2_)
            throw Error(errc::variable_mismatch, "bivariate variable tags differ");
    }

    Var v1_, v2_;
    std::vector<Term> terms_;
};

}  // namespace jt
