#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

#include "jonestwist/braid.hpp"
#include "jonestwist/laurent.hpp"
#include "jonestwist/skein.hpp"
#include "jonestwist/tl.hpp"

namespace jt {

/// Jones polynomial of the (m,n) torus knot, m, n >= 2 coprime:
///   t^{(n-1)(m-1)/2} (1 - t^{m+1} - t^{n+1} + t^{n+m}) / (1 - t^2).
/// Returned in the A variable so the half-integer prefactor stays integral
/// (t^{1/2} = A^-2); use a_to_t when (n-1)(m-1) is even.
inline Laurent torus_jones(int m, int n) {
    if (m < 2 || n < 2) throw Error(errc::index_range, "torus parameters must be >= 2");
    if (std::gcd(m, n) != 1)
        throw Error(errc::index_range, "torus knot parameters must be coprime");
    Laurent numerator = Laurent::from_terms(
        Var::A, {{0, 1}, {-4 * (m + 1), -1}, {-4 * (n + 1), -1}, {-4 * (n + m), 1}});
    Laurent denom = Laurent::from_terms(Var::A, {{0, 1}, {-8, -1}});
    Laurent q = Laurent::exact_divide(numerator, denom);
    return q.shifted(-2 * (n - 1) * (m - 1));
}

/// Normalized Jones polynomial of the twist knot K_n (n half twists closed
/// off by a clasp): K_1 is a trefoil, K_2 the figure eight. Up to units,
///   V_{K_{2m}} = (1 - t^3 + t^{2m+1} + t^{2m+3}) / (1 + t)
///   V_{K_{2m+1}} = (1 - t^3 - t^{2m+2} - t^{2m+4}) / (1 + t)
/// with the division certified exact. Returned in t.
inline Laurent twist_knot_jones(int n) {
    if (n < 1) throw Error(errc::index_range, "twist knot index must be >= 1");
    Laurent numerator(Var::t);
    if (n % 2 == 0) {
        int m = n / 2;
        numerator = Laurent::from_terms(Var::t, {{0, 1}, {3, -1}, {2 * m + 1, 1}, {2 * m + 3, 1}});
    } else {
        int m = (n - 1) / 2;
        numerator = Laurent::from_terms(Var::t, {{0, 1}, {3, -1}, {2 * m + 2, -1}, {2 * m + 4, -1}});
    }
    Laurent denom = Laurent::from_terms(Var::t, {{0, 1}, {1, 1}});
    return Laurent::exact_divide(numerator, denom).normalize_up_to_unit().poly;
}

/// Partial geometric sum X_m = sum_{i=0}^{2m} (-1)^i A^{-4i}.
inline Laurent twist_sum(int m) {
    std::vector<Laurent::Term> terms;
    for (int i = 0; i <= 2 * m; ++i) terms.emplace_back(-4 * i, (i % 2 == 0) ? 1 : -1);
    return Laurent::from_terms(Var::A, std::move(terms));
}

/// Bracket after adding m full twists on two strands at a crossing, from the
/// brackets of the two splices there:
///   <L_m> = A^{2m} ( A <identity splice> + X_m A^{-1} <cup-cap splice> ).
/// m = 0 is the plain Kauffman skein relation.
inline Laurent two_strand_twist(const Laurent& splice_identity, const Laurent& splice_cupcap,
                                int m) {
    if (m < 0) throw Error(errc::index_range, "twist count must be nonnegative");
    Laurent inner = splice_identity.shifted(1) + twist_sum(m) * splice_cupcap.shifted(-1);
    return inner.shifted(2 * m);
}

/// Pretzel link parameters: one signed crossing count per vertical band.
struct PretzelParams {
    std::vector<int> bands;
};

namespace detail {

/// A vertical band of `a` crossings expands over the two 2-strand tangles as
/// v * (vertical pair) + h * (cup-cap): v_a = A^a and h_a the alternating
/// geometric sum, mirrored for negative a.
inline std::pair<Laurent, Laurent> band_coefficients(int a) {
    if (a == 0) return {Laurent::one(Var::A), Laurent::zero(Var::A)};
    int k = std::abs(a);
    std::vector<Laurent::Term> terms;
    for (int i = 0; i < k; ++i) terms.emplace_back(k - 2 - 4 * i, (i % 2 == 0) ? 1 : -1);
    Laurent h = Laurent::from_terms(Var::A, std::move(terms));
    Laurent v = Laurent::monomial(Var::A, k);
    if (a < 0) return {v.mirror(), h.mirror()};
    return {v, h};
}

}  // namespace detail

/// Kauffman bracket of the pretzel link P(a_1, ..., a_n). The bands form a
/// cyclic chain of 2-strand tangles, so the bracket is the Markov trace of
/// the product of the band elements in TL_2, each band contributing
/// h_a 1 + v_a e_1 once rotated into the chain square. A single band closes
/// to the (2,a) torus link, i.e. the 2-braid closure of sigma_1^a.
inline Laurent pretzel_bracket(const PretzelParams& params) {
    const auto& a = params.bands;
    if (a.empty()) throw Error(errc::index_range, "pretzel needs at least one band");
    if (a.size() == 1) {
        BraidWord b;
        b.strands = 2;
        for (int i = 0; i < std::abs(a[0]); ++i) b.letters.push_back(a[0] > 0 ? 1 : -1);
        return bracket(b);
    }
    const TLContext& ctx = TLContext::get(2);
    const std::uint32_t one_rank = ctx.identity_rank();
    const std::uint32_t e_rank = ctx.generator_rank(1);
    TLVector chain(2);
    bool first = true;
    for (int ai : a) {
        auto [v, h] = detail::band_coefficients(ai);
        TLVector band = TLVector::basis(2, one_rank).scaled(h) +
                        TLVector::basis(2, e_rank).scaled(v);
        chain = first ? band : chain.multiply(band);
        first = false;
    }
    return chain.closure_trace();
}

/// Normalized Jones polynomial of the pretzel P(2k+1, ..., 2k+1) with n
/// equal odd bands, in closed form:
///   ((t^2+t+1)(t^{2k+2} + t)^n + t (t^{2k+2} - t^2 - t - 1)^n) / (1+t)^{n+1}
/// with the division certified exact. Returned in t, normalized up to units.
inline Laurent pretzel_equal_odd_closed_form(int k, int n) {
    if (k < 1) throw Error(errc::index_range, "band parameter k must be >= 1");
    if (n < 2) throw Error(errc::index_range, "band count must be >= 2");
    Laurent fa = Laurent::from_terms(Var::t, {{2 * k + 2, 1}, {1, 1}});
    Laurent fb = Laurent::from_terms(Var::t, {{2 * k + 2, 1}, {2, -1}, {1, -1}, {0, -1}});
    Laurent fc = Laurent::from_terms(Var::t, {{2, 1}, {1, 1}, {0, 1}});
    Laurent numerator = fc * fa.pow(n) + Laurent::monomial(Var::t, 1) * fb.pow(n);
    Laurent denom = Laurent::from_terms(Var::t, {{0, 1}, {1, 1}}).pow(n + 1);
    return Laurent::exact_divide(numerator, denom).normalize_up_to_unit().poly;
}

}  // namespace jt
