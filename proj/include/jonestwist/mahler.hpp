#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "jonestwist/bivariate.hpp"
#include "jonestwist/laurent.hpp"
#include "jonestwist/roots.hpp"

namespace jt {

enum class MahlerMethod { jensen_roots, quadrature, boyd_lawton };

inline const char* mahler_method_name(MahlerMethod m) {
    switch (m) {
        case MahlerMethod::jensen_roots: return "jensen-roots";
        case MahlerMethod::quadrature: return "quadrature";
        case MahlerMethod::boyd_lawton: return "boyd-lawton";
    }
    return "?";
}

struct MahlerResult {
    double value = 0.0;
    MahlerMethod method = MahlerMethod::jensen_roots;
    double error_estimate = 0.0;
    bool flagged = false;  ///< set when the method stopped without stabilizing
    std::vector<double> history;  ///< refinement or schedule values
    double max_root_residual = 0.0;
    long excluded_points = 0;  ///< quadrature nodes excluded at log singularities
    std::string note;
};

/// Mahler measure of a one-variable integer Laurent polynomial by Jensen's
/// formula: strip the monomial unit, take all roots, multiply |leading|
/// by max(1, |root|) over the roots.
inline MahlerResult mahler_univariate(const Laurent& f) {
    if (f.is_zero()) throw Error(errc::zero_input, "Mahler measure of 0 is undefined");
    MahlerResult out;
    out.method = MahlerMethod::jensen_roots;
    RootSet rs = find_roots(f);
    double logm = std::log(rs.leading_abs);
    double relerr = 0.0;
    for (const auto& r : rs.roots) {
        double m = std::abs(r.value);
        if (m > 1.0) logm += std::log(m);
        relerr += std::min(r.residual, 1.0);
    }
    out.value = std::exp(logm);
    out.max_root_residual = rs.max_residual();
    out.error_estimate = out.value * relerr;
    out.flagged = !rs.all_converged;
    if (out.flagged) out.note = "some roots did not reach the residual threshold";
    return out;
}

/// Trapezoidal quadrature of log|f| over the unit torus, with grid doubling
/// until two successive estimates agree. The integrand is periodic so the
/// trapezoid rule is spectrally accurate away from the (measure-zero) zero
/// set; grid points that land on it are excluded and counted.
inline MahlerResult mahler_quadrature(const Bivariate& f, int initial_grid = 64,
                                      double tolerance = 1e-4, int max_doublings = 6) {
    if (f.is_zero()) throw Error(errc::zero_input, "Mahler measure of 0 is undefined");
    MahlerResult out;
    out.method = MahlerMethod::quadrature;

    auto estimate = [&](int N, long& excluded) {
        // f on the grid as a sum of terms c * omega^(j*e1 + k*e2 mod N).
        std::vector<std::complex<double>> omega(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            omega[static_cast<std::size_t>(i)] =
                std::polar(1.0, 2.0 * M_PI * static_cast<double>(i) / N);
        struct T {
            long e1, e2;
            double c;
        };
        std::vector<T> terms;
        terms.reserve(f.terms().size());
        for (const auto& [e, c] : f.terms())
            terms.push_back({static_cast<long>(((e.first % N) + N) % N),
                             static_cast<long>(((e.second % N) + N) % N),
                             static_cast<double>(c)});
        double acc = 0.0;
        excluded = 0;
        for (int j = 0; j < N; ++j) {
            for (int k = 0; k < N; ++k) {
                std::complex<double> v(0.0, 0.0);
                for (const auto& t : terms)
                    v += t.c * omega[static_cast<std::size_t>((j * t.e1 + k * t.e2) % N)];
                double a = std::abs(v);
                if (a < 1e-300) {
                    ++excluded;
                    continue;
                }
                acc += std::log(a);
            }
        }
        long used = static_cast<long>(N) * N - excluded;
        return used > 0 ? std::exp(acc / static_cast<double>(used)) : 0.0;
    };

    int N = initial_grid;
    long excl = 0;
    double prev = estimate(N, excl);
    out.history.push_back(prev);
    out.excluded_points = excl;
    for (int i = 0; i < max_doublings; ++i) {
        N *= 2;
        double cur = estimate(N, excl);
        out.history.push_back(cur);
        out.excluded_points += excl;
        out.error_estimate = std::abs(cur - prev);
        out.value = cur;
        if (out.error_estimate < tolerance) return out;
        prev = cur;
    }
    out.flagged = true;
    out.note = "grid refinement exhausted before reaching tolerance";
    return out;
}

/// Boyd-Lawton specialization: M(f) as the limit of the exact univariate
/// measures M(f(z, z^d)) along an increasing schedule of d. Stops early when
/// the sequence is Cauchy at the tolerance; a result that never stabilizes
/// (or hits the root-degree cap) is returned flagged with the best estimate.
inline MahlerResult mahler_boyd_lawton(const Bivariate& f,
                                       std::vector<int> schedule = {16, 32, 64, 128, 256},
                                       double tolerance = 1e-4) {
    if (f.is_zero()) throw Error(errc::zero_input, "Mahler measure of 0 is undefined");
    MahlerResult out;
    out.method = MahlerMethod::boyd_lawton;
    if (f.is_zero() || f.max_exp2() == f.min_exp2()) {
        // Independent of the second variable up to a monomial: one shot.
        Laurent g = f.collapse_second(0);
        MahlerResult uni = mahler_univariate(g);
        out.value = uni.value;
        out.error_estimate = uni.error_estimate;
        out.history.push_back(uni.value);
        out.max_root_residual = uni.max_root_residual;
        out.note = "constant in the second variable";
        return out;
    }
    double prev = 0.0;
    bool have_prev = false;
    for (int d : schedule) {
        Laurent g = f.collapse_second(d);
        MahlerResult uni;
        try {
            uni = mahler_univariate(g);
        } catch (const Error& e) {
            if (std::string(e.code()) == errc::degree_cap) {
                out.flagged = true;
                out.note = "schedule truncated at d=" + std::to_string(d) + ": " + e.what();
                break;
            }
            throw;
        }
        out.history.push_back(uni.value);
        out.max_root_residual = std::max(out.max_root_residual, uni.max_root_residual);
        out.value = uni.value;
        if (have_prev) {
            out.error_estimate = std::abs(uni.value - prev);
            if (out.error_estimate < tolerance) return out;
        }
        prev = uni.value;
        have_prev = true;
    }
    if (!out.flagged) {
        out.flagged = true;
        out.note = "schedule exhausted without stabilization";
    }
    return out;
}

}  // namespace jt
