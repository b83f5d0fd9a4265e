#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jonestwist/bivariate.hpp"
#include "jonestwist/braid.hpp"
#include "jonestwist/laurent.hpp"
#include "jonestwist/mahler.hpp"
#include "jonestwist/rational.hpp"
#include "jonestwist/skein.hpp"

namespace jt {

/// Contiguous strand range s .. s+width-1 (1-based) that full twists act on.
struct TwistRegion {
    int first_strand = 1;
    int width = 2;
};

/// Where the twist word is spliced into the base word. The closure is
/// conjugation invariant, so the bracket does not depend on this.
enum class Insertion { word_end, word_start };

struct TwistFamily {
    BraidWord base;
    TwistRegion region;
    Insertion insertion = Insertion::word_end;
};

/// One full right twist on the region: ((sigma_s ... sigma_{s+n-2})^n),
/// n(n-1) positive letters. A pure braid; its induced permutation is the
/// identity.
inline BraidWord full_twist_word(int strands, const TwistRegion& region) {
    const int s = region.first_strand;
    const int n = region.width;
    if (n < 2) throw Error(errc::index_range, "twist region must span at least 2 strands");
    if (s < 1 || s + n - 1 > strands) throw Error(errc::index_range, "twist region out of range");
    BraidWord w;
    w.strands = strands;
    w.letters.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int rep = 0; rep < n; ++rep)
        for (int i = s; i <= s + n - 2; ++i) w.letters.push_back(i);
    return w;
}

/// The base word with Delta^{2m} on the region spliced in.
inline BraidWord with_twists(const TwistFamily& fam, int m) {
    if (m < 0) throw Error(errc::index_range, "twist count must be nonnegative");
    BraidWord tw = full_twist_word(fam.base.strands, fam.region);
    BraidWord out;
    out.strands = fam.base.strands;
    if (fam.insertion == Insertion::word_start) {
        for (int i = 0; i < m; ++i) out.append(tw);
        out.append(fam.base);
    } else {
        out.append(fam.base);
        for (int i = 0; i < m; ++i) out.append(tw);
    }
    return out;
}

/// Full-twist eigenvalue exponents k_i = i(n-i+1) for i = 0..[n/2]: the full
/// twist acts on the i-th block as t^{k_i}.
struct TwistExponents {
    int width = 0;
    std::vector<int> k;
};

inline TwistExponents twist_exponents(int n) {
    if (n < 2) throw Error(errc::index_range, "twist exponents need width >= 2");
    TwistExponents te;
    te.width = n;
    for (int i = 0; i <= n / 2; ++i) te.k.push_back(i * (n - i + 1));
    return te;
}

/// The two-variable polynomial behind a twist family, with the (1 + A^-4)
/// denominator cleared so every coefficient is an integer. The full twist in
/// the Kauffman representation acts on the i-th block as
/// A^{n(n-1)} t^{k_i}, so the recovered polynomial describes the
/// writhe-corrected bracket sequence and the framing unit A^{n(n-1) m} is
/// restored when evaluating: substituting x -> A^{-4m}, dividing out the
/// (1 + A^-4), and multiplying by the unit reproduces the bracket of the
/// m-twisted link exactly, for every m >= 0.
struct LimitPolynomial {
    int width = 0;
    std::vector<int> exponents;          ///< k_i
    int unit_exponent = 0;               ///< n(n-1): A power restored per twist
    Bivariate cleared;                   ///< (1 + A^-4) * sum_i x^{k_i} c_i(A), vars (A, x)
    std::vector<Rational> coefficients;  ///< the c_i(A) themselves
    std::vector<int> holdout_checked;    ///< m values certified against direct evaluation

    Laurent bracket_at(int m) const {
        if (m < 0) throw Error(errc::index_range, "twist count must be nonnegative");
        Laurent numerator = cleared.collapse_second(-4 * m);
        Laurent one_plus_t = Laurent::from_terms(Var::A, {{-4, 1}, {0, 1}});
        return Laurent::exact_divide(numerator, one_plus_t).shifted(unit_exponent * m);
    }
};

/// Recovers the limit polynomial exactly. The writhe-corrected bracket of
/// the m-twisted link is sum_i (A^{-4 k_i})^m c_i(A), so [n/2]+1 bracket
/// evaluations at m = 0..[n/2] determine the c_i through the transposed
/// Vandermonde system in the monomial nodes A^{-4 k_i}; the solve is done
/// with symbolic Lagrange numerators and certified exact division. Held-out
/// twist values are then checked against direct skein evaluation.
inline LimitPolynomial recover_limit_polynomial(const TwistFamily& fam,
                                                std::vector<int> holdouts = {}) {
    const int n = fam.region.width;
    TwistExponents te = twist_exponents(n);
    const int h = static_cast<int>(te.k.size()) - 1;  // = [n/2]
    const int unit = n * (n - 1);

    std::vector<Laurent> brackets;
    for (int m = 0; m <= h; ++m)
        brackets.push_back(bracket(with_twists(fam, m)).shifted(-unit * m));

    std::vector<Laurent> nodes;  // z_i = A^{-4 k_i}
    for (int ki : te.k) nodes.push_back(Laurent::monomial(Var::A, -4 * ki));

    const Laurent one_plus_t = Laurent::from_terms(Var::A, {{-4, 1}, {0, 1}});

    LimitPolynomial lp;
    lp.width = n;
    lp.exponents = te.k;
    lp.unit_exponent = unit;
    lp.cleared = Bivariate::zero(Var::A, Var::x);

    for (int i = 0; i <= h; ++i) {
        // Lagrange numerator prod_{j != i} (y - z_j) expanded in y.
        std::vector<Laurent> sigma{Laurent::one(Var::A)};
        for (int j = 0; j <= h; ++j) {
            if (j == i) continue;
            std::vector<Laurent> next(sigma.size() + 1, Laurent::zero(Var::A));
            for (std::size_t a = 0; a < sigma.size(); ++a) {
                next[a + 1] += sigma[a];            // y * sigma_a
                next[a] -= sigma[a] * nodes[static_cast<std::size_t>(j)];
            }
            sigma = std::move(next);
        }
        Laurent numerator = Laurent::zero(Var::A);
        for (std::size_t m = 0; m < sigma.size(); ++m) numerator += sigma[m] * brackets[m];
        Laurent denom = Laurent::one(Var::A);
        for (int j = 0; j <= h; ++j) {
            if (j == i) continue;
            denom *= nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
        }
        if (denom.is_zero())
            throw Error(errc::internal, "singular interpolation system: repeated twist exponents");

        lp.coefficients.emplace_back(numerator, denom);
        // (1 + A^-4) c_i clears to an integer Laurent polynomial; failure
        // here means a convention bug upstream.
        Laurent cleared_ci;
        try {
            cleared_ci = Laurent::exact_divide(one_plus_t * numerator, denom);
        } catch (const Error&) {
            throw Error(errc::internal,
                        "(1+t) c_i failed to clear to integer coefficients at block " +
                            std::to_string(i));
        }
        lp.cleared += Bivariate::lift(cleared_ci, Var::x) *
                      Bivariate::monomial(Var::A, Var::x, 0, te.k[static_cast<std::size_t>(i)]);
    }

    if (holdouts.empty()) holdouts = {h + 2, h + 5};
    for (int m : holdouts) {
        Laurent direct = bracket(with_twists(fam, m));
        if (lp.bracket_at(m) != direct)
            throw Error(errc::internal,
                        "held-out check failed at m=" + std::to_string(m) +
                            " (twist convention mismatch)");
        lp.holdout_checked.push_back(m);
    }
    return lp;
}

/// Annihilation check for the finite twist expansion: the operator
/// prod_i (S - A^{-4 k_i}) in the shift S of m kills the writhe-corrected
/// bracket sequence A^{-n(n-1) m} <L_m>. Verified exactly on 2([n/2]+1)
/// consecutive brackets.
inline bool twist_recurrence_holds(const TwistFamily& fam) {
    TwistExponents te = twist_exponents(fam.region.width);
    const int h = static_cast<int>(te.k.size()) - 1;
    const int unit = fam.region.width * (fam.region.width - 1);
    std::vector<Laurent> coeff{Laurent::one(Var::A)};  // expand the operator
    for (int ki : te.k) {
        Laurent z = Laurent::monomial(Var::A, -4 * ki);
        std::vector<Laurent> next(coeff.size() + 1, Laurent::zero(Var::A));
        for (std::size_t a = 0; a < coeff.size(); ++a) {
            next[a + 1] += coeff[a];
            next[a] -= coeff[a] * z;
        }
        coeff = std::move(next);
    }
    std::vector<Laurent> brackets;
    for (int m = 0; m <= 2 * h + 1; ++m)
        brackets.push_back(bracket(with_twists(fam, m)).shifted(-unit * m));
    for (int m = 0; m + static_cast<int>(coeff.size()) - 1 <= 2 * h + 1; ++m) {
        Laurent acc = Laurent::zero(Var::A);
        for (std::size_t j = 0; j < coeff.size(); ++j)
            acc += coeff[j] * brackets[static_cast<std::size_t>(m) + j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

/// One row of a twist series.
struct SeriesRecord {
    int m = 0;
    Laurent bracket_a{Var::A};
    Laurent jones_a{Var::A};
    std::vector<Int> coeffs;  ///< normalized ascending coefficient vector
    bool half_integer_grading = false;  ///< link closures live on the t^(1/2) lattice
    int span = 0;
    Int l1_norm = 0;          ///< of the Jones coefficients
    Int l1_norm_cleared = 0;  ///< of (1+t) V, the quantity that stabilizes
    double mahler = 0.0;
};

/// Normalized coefficient vector of a Jones polynomial given in A. Knots land
/// on the t lattice; links need the t^(1/2) lattice and are flagged.
inline std::pair<std::vector<Int>, bool> jones_coefficient_vector(const Laurent& jones_in_a) {
    if (jones_in_a.is_zero()) return {{}, false};
    Laurent norm = jones_in_a.normalize_up_to_unit().poly;
    bool half = false;
    for (const auto& [e, c] : norm.terms())
        if (e % 4 != 0) half = true;
    // Ascending t power = descending A power; reverse after rebasing.
    Laurent based = norm.rebase(Var::t, half ? -2 : -4);
    Laurent canon = based.normalize_up_to_unit().poly;
    return {canon.dense_coeffs(), half};
}

inline SeriesRecord make_series_record(int m, Laurent bracket_a, int writhe_at_m) {
    SeriesRecord rec;
    rec.m = m;
    Int sign = (writhe_at_m % 2 == 0) ? 1 : -1;
    rec.jones_a = bracket_a.shifted(-3 * writhe_at_m, sign);
    rec.bracket_a = std::move(bracket_a);
    auto [vec, half] = jones_coefficient_vector(rec.jones_a);
    rec.coeffs = std::move(vec);
    rec.half_integer_grading = half;
    rec.span = rec.coeffs.empty() ? 0 : static_cast<int>(rec.coeffs.size()) - 1;
    for (const Int& c : rec.coeffs) rec.l1_norm += abs(c);
    {
        Laurent vt = Laurent::from_coeffs(Var::t, 0, rec.coeffs);
        Laurent one_plus_t = Laurent::from_terms(Var::t, {{0, 1}, {1, 1}});
        rec.l1_norm_cleared = (vt * one_plus_t).l1_norm();
    }
    if (!rec.jones_a.is_zero()) rec.mahler = mahler_univariate(rec.jones_a).value;
    return rec;
}

struct TwistSeriesOptions {
    /// Largest m evaluated by direct skein computation; beyond it the
    /// certified limit polynomial supplies brackets. Negative means
    /// everything is evaluated directly.
    int direct_cutoff = -2;
};

/// Brackets, Jones polynomials, coefficient vectors, spans and Mahler
/// measures of the twist family along a list of twist counts.
inline std::vector<SeriesRecord> twist_series(const TwistFamily& fam, const std::vector<int>& ms,
                                              TwistSeriesOptions opts = {}) {
    const int n = fam.region.width;
    int cutoff = opts.direct_cutoff;
    if (cutoff == -2) cutoff = n / 2 + 5;  // default: everything the recovery touches
    bool need_limit = false;
    for (int m : ms)
        if (cutoff >= 0 && m > cutoff) need_limit = true;
    std::optional<LimitPolynomial> lp;
    if (need_limit) lp = recover_limit_polynomial(fam);

    const int per_twist_writhe = n * (n - 1);
    std::vector<SeriesRecord> out;
    out.reserve(ms.size());
    for (int m : ms) {
        Laurent br = (cutoff >= 0 && m > cutoff) ? lp->bracket_at(m)
                                                 : bracket(with_twists(fam, m));
        out.push_back(make_series_record(m, std::move(br),
                                         fam.base.writhe() + m * per_twist_writhe));
    }
    return out;
}

/// Mahler measure of the recovered two-variable limit polynomial.
inline MahlerResult limit_mahler(const TwistFamily& fam,
                                 std::vector<int> schedule = {16, 32, 64, 128, 256},
                                 double tolerance = 1e-4) {
    LimitPolynomial lp = recover_limit_polynomial(fam);
    return mahler_boyd_lawton(lp.cleared, std::move(schedule), tolerance);
}

/// Multi-region limit per the iterated specialization: the measure of the
/// (s+1)-variable limit is approached along m_j = d^j, each entry evaluated
/// as an exact one-variable measure of the multi-twisted bracket.
inline MahlerResult limit_mahler_multi(const BraidWord& base,
                                       const std::vector<TwistRegion>& regions,
                                       std::vector<int> schedule = {2, 3, 4, 6, 8},
                                       double tolerance = 1e-3) {
    if (regions.empty()) throw Error(errc::index_range, "need at least one twist region");
    MahlerResult out;
    out.method = MahlerMethod::boyd_lawton;
    double prev = 0.0;
    bool have_prev = false;
    for (int d : schedule) {
        BraidWord word = base;
        long long mj = 1;
        for (const TwistRegion& r : regions) {
            mj *= d;
            BraidWord tw = full_twist_word(base.strands, r);
            for (long long i = 0; i < mj; ++i) word.append(tw);
        }
        MahlerResult uni = mahler_univariate(bracket(word));
        out.history.push_back(uni.value);
        out.value = uni.value;
        if (have_prev) {
            out.error_estimate = std::abs(uni.value - prev);
            if (out.error_estimate < tolerance) return out;
        }
        prev = uni.value;
        have_prev = true;
    }
    out.flagged = true;
    out.note = "schedule exhausted without stabilization";
    return out;
}

/// Traces of the minimal central idempotents of TL_n, renormalized so that
/// tr(1_n) = delta^{n-1}. Entry i is the trace of the full central block,
/// i.e. the matrix-unit trace tr(1_n) tau^i P_{n-2i}(tau) (tau = delta^-2,
/// P the Chebyshev-like recursion P_{k+1} = P_k - x P_{k-1}) times the
/// dimension binom(n,i) - binom(n,i-1) of the block. Entry 0 is the
/// Jones-Wenzl trace. The entries sum to delta^{n-1}.
inline std::vector<Rational> idempotent_traces(int n) {
    if (n < 2) throw Error(errc::index_range, "idempotent traces need n >= 2");
    const Laurent delta = delta_poly();
    const Rational tau(Laurent::one(Var::A), delta * delta);
    const Rational tr_identity = Rational::from_poly([&] {
        Laurent p = Laurent::one(Var::A);
        for (int i = 1; i < n; ++i) p *= delta;
        return p;
    }());

    // P_k(tau) by the recursion, up to k = n.
    std::vector<Rational> P{Rational::one(Var::A), Rational::one(Var::A)};
    for (int k = 1; k < n; ++k) P.push_back(P[static_cast<std::size_t>(k)] -
                                            tau * P[static_cast<std::size_t>(k - 1)]);

    auto binom = [](int a, int b) {
        if (b < 0 || b > a) return Int(0);
        Int r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };

    std::vector<Rational> out;
    for (int i = 0; i <= n / 2; ++i) {
        Rational tau_i = Rational::one(Var::A);
        for (int j = 0; j < i; ++j) tau_i *= tau;
        Rational minimal = (n % 2 == 0 && i == n / 2)
                               ? tr_identity * tau_i
                               : tr_identity * tau_i * P[static_cast<std::size_t>(n - 2 * i)];
        Int mult = binom(n, i) - binom(n, i - 1);
        out.push_back(minimal * Rational::from_poly(Laurent::constant(Var::A, mult)));
    }
    return out;
}

/// Which separator shape the block decomposition looks for.
enum class Parity { odd, even };

struct BlockDecomposition {
    struct Block {
        std::size_t start;
        std::vector<Int> coeffs;
    };
    struct Separator {
        std::size_t start;
        std::size_t length;
        Int alpha;  ///< 0 for a zero run; otherwise the alternating constant
    };
    Parity parity = Parity::odd;
    std::vector<Block> blocks;
    std::vector<Separator> separators;
};

/// Splits a coefficient vector into blocks separated by maximal zero runs
/// (odd parity) or maximal alternating-constant runs a, -a, a, ... (even
/// parity) of length at least min_separator. Deterministic greedy scan; a
/// vector with no separators is a single block.
inline BlockDecomposition detect_blocks(const std::vector<Int>& coeffs, Parity parity,
                                        std::size_t min_separator = 4) {
    BlockDecomposition out;
    out.parity = parity;
    const std::size_t len = coeffs.size();
    if (len == 0) return out;

    bool all_zero = true;
    for (const Int& c : coeffs)
        if (c != 0) all_zero = false;
    if (all_zero) {
        out.separators.push_back({0, len, 0});
        return out;
    }

    auto run_length = [&](std::size_t i) -> std::size_t {
        const Int& v = coeffs[i];
        if (parity == Parity::odd && v != 0) return 0;
        std::size_t j = i;
        while (j < len) {
            Int expect = ((j - i) % 2 == 0) ? v : -v;
            if (coeffs[j] != expect) break;
            ++j;
        }
        return j - i;
    };

    std::size_t block_start = 0;
    std::size_t i = 0;
    while (i < len) {
        std::size_t run = run_length(i);
        if (run >= min_separator) {
            if (i > block_start)
                out.blocks.push_back(
                    {block_start,
                     std::vector<Int>(coeffs.begin() + static_cast<std::ptrdiff_t>(block_start),
                                      coeffs.begin() + static_cast<std::ptrdiff_t>(i))});
            out.separators.push_back({i, run, abs(coeffs[i])});
            i += run;
            block_start = i;
        } else {
            ++i;
        }
    }
    if (block_start < len)
        out.blocks.push_back(
            {block_start,
             std::vector<Int>(coeffs.begin() + static_cast<std::ptrdiff_t>(block_start),
                              coeffs.end())});
    return out;
}

/// Minimum sup-norm of a nonzero integer vector orthogonal to a, by
/// exhaustive search over boxes of increasing radius. Defined for length at
/// least 2.
inline int nu(const std::vector<long long>& a) {
    if (a.size() < 2)
        throw Error(errc::undefined_value, "nu is undefined for vectors of length < 2");
    const std::size_t s = a.size();
    for (int r = 1;; ++r) {
        std::vector<long long> x(s, -r);
        while (true) {
            long long maxabs = 0;
            for (long long v : x) maxabs = std::max(maxabs, std::llabs(v));
            if (maxabs == r) {  // interior radii were covered in earlier passes
                Int dot = 0;
                bool nonzero = false;
                for (std::size_t i = 0; i < s; ++i) {
                    dot += Int(a[i]) * x[i];
                    if (x[i] != 0) nonzero = true;
                }
                if (nonzero && dot == 0) return r;
            }
            std::size_t pos = 0;
            while (pos < s && x[pos] == r) x[pos++] = -r;
            if (pos == s) break;
            ++x[pos];
        }
    }
}

}  // namespace jt
