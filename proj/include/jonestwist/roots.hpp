#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "jonestwist/laurent.hpp"

namespace jt {

/// Hard cap on the degree handed to the simultaneous root finder.
inline constexpr int kRootDegreeCap = 2000;

struct RootEntry {
    std::complex<double> value;
    double residual;  ///< |f(z)/f'(z)| after polishing
    bool converged;
};

struct RootSet {
    Var variable = Var::t;
    int degree = 0;              ///< degree of the monomial-stripped polynomial
    double leading_abs = 0.0;    ///< |leading coefficient|
    double constant_abs = 0.0;   ///< |coefficient of the lowest term|
    std::vector<RootEntry> roots;
    bool all_converged = true;

    double max_residual() const {
        double m = 0.0;
        for (const auto& r : roots) m = std::max(m, r.residual);
        return m;
    }
};

namespace detail {

/// Evaluates p and p' at z by Horner on dense coefficients (ascending).
inline void horner2(const std::vector<double>& c, std::complex<double> z,
                    std::complex<double>& p, std::complex<double>& dp) {
    p = std::complex<double>(c.back(), 0.0);
    dp = std::complex<double>(0.0, 0.0);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

}  // namespace detail

/// All complex roots of an integer Laurent polynomial (monomial factor
/// stripped first), found by Aberth-Ehrlich simultaneous iteration from
/// deterministic initial guesses on a circle. Each root carries the residual
/// bound |f/f'|; roots that fail to reach the certification threshold are
/// flagged rather than dropped.
inline RootSet find_roots(const Laurent& f) {
    if (f.is_zero()) throw Error(errc::zero_input, "zero polynomial has no roots");
    RootSet rs;
    rs.variable = f.var();
    Laurent p = f.normalize_up_to_unit().poly;  // lowest exponent 0, c0 > 0
    rs.degree = p.high_exponent();
    if (rs.degree > kRootDegreeCap)
        throw Error(errc::degree_cap, "degree " + std::to_string(rs.degree) +
                                          " exceeds root-finder cap");

    // Uniform scaling keeps huge integer coefficients inside double range
    // without moving the roots.
    std::vector<Int> ic = p.dense_coeffs();
    std::size_t maxbits = 0;
    for (const Int& c : ic)
        if (c != 0) maxbits = std::max(maxbits, static_cast<std::size_t>(msb(abs(c)) + 1));
    int shift = maxbits > 512 ? static_cast<int>(maxbits - 512) : 0;
    std::vector<double> c(ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i) c[i] = static_cast<double>(ic[i] >> shift);
    rs.leading_abs = std::abs(static_cast<double>(ic.back()));
    rs.constant_abs = std::abs(static_cast<double>(ic.front()));

    const int d = rs.degree;
    if (d == 0) return rs;

    // Initial guesses: circle of radius |c0/cd|^(1/d) with an angular offset
    // to break symmetry.
    double r0 = std::pow(std::abs(c.front() / c.back()), 1.0 / d);
    if (!(r0 > 0.0) || !std::isfinite(r0)) r0 = 1.0;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        double th = 2.0 * M_PI * (k + 0.3727) / d + 0.5;
        z[static_cast<std::size_t>(k)] = std::polar(r0, th);
    }

    const int max_sweeps = 400;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> pv, dv;
            detail::horner2(c, z[static_cast<std::size_t>(k)], pv, dv);
            if (std::abs(dv) == 0.0) {
                z[static_cast<std::size_t>(k)] += std::complex<double>(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            std::complex<double> newton = pv / dv;
            std::complex<double> s(0.0, 0.0);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                std::complex<double> diff =
                    z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-300, 0.0);
                s += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - newton * s;
            std::complex<double> step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            z[static_cast<std::size_t>(k)] -= step;
            worst = std::max(worst,
                             std::abs(step) / (1.0 + std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (worst < 1e-15) break;
    }

    rs.roots.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        std::complex<double> pv, dv;
        detail::horner2(c, z[static_cast<std::size_t>(k)], pv, dv);
        double res = std::abs(dv) > 0.0 ? std::abs(pv) / std::abs(dv) : std::abs(pv);
        bool ok = res < 1e-10;
        if (!ok) rs.all_converged = false;
        rs.roots.push_back({z[static_cast<std::size_t>(k)], res, ok});
    }
    std::sort(rs.roots.begin(), rs.roots.end(), [](const RootEntry& a, const RootEntry& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return rs;
}

struct UnitCircleStats {
    int outside_count = 0;       ///< roots with |z| - 1 >= epsilon
    int inside_count = 0;        ///< roots with 1 - |z| >= epsilon
    int distinct_count = 0;      ///< clusters under the residual radius
    double outside_product = 1.0;  ///< product of |z| over all roots with |z| > 1
};

/// Counts roots at least epsilon off the unit circle, clusters numerically
/// coincident roots, and forms the Jensen product over roots outside the
/// closed unit disc.
inline UnitCircleStats unit_circle_stats(const RootSet& rs, double epsilon) {
    UnitCircleStats st;
    const double cluster_radius = std::max(2.0 * rs.max_residual(), 1e-9);
    const std::size_t k = rs.roots.size();
    std::vector<std::size_t> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (std::abs(rs.roots[i].value - rs.roots[j].value) <= cluster_radius)
                parent[find(i)] = find(j);
    for (std::size_t i = 0; i < k; ++i)
        if (find(i) == i) ++st.distinct_count;

    for (const auto& r : rs.roots) {
        double m = std::abs(r.value);
        if (m - 1.0 >= epsilon) ++st.outside_count;
        if (1.0 - m >= epsilon) ++st.inside_count;
        if (m > 1.0) st.outside_product *= m;
    }
    return st;
}

}  // namespace jt
