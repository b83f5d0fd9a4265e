#pragma once

#include <cstdlib>
#include <vector>

#include "jonestwist/braid.hpp"
#include "jonestwist/laurent.hpp"
#include "jonestwist/skein.hpp"
#include "jonestwist/twist.hpp"

namespace jt {

/// Blackboard-parallel cable of a braid word plus the framing correction
/// that makes the closure 0-framed.
struct CabledBraid {
    BraidWord original;
    int cable_width = 1;       ///< r
    BraidWord word;            ///< cabled word on r * k strands, correction included
    int framing_full_twists = 0;  ///< full twists on r strands appended: -writhe(original)
};

namespace detail {

/// Word whose permutation swaps the width-r blocks at positions i, i+1, with
/// every elementary crossing carrying the sign of the original letter. For a
/// negative letter this is the exact inverse of the positive word, so cabled
/// Reidemeister II pairs cancel.
inline void append_cabled_letter(BraidWord& out, int letter, int r) {
    const int i = std::abs(letter) - 1;
    const int p = i * r;  // strands p+1..p+r and p+r+1..p+2r
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
    for (int pass = 0; pass < r; ++pass)
        for (int q = p + r + pass; q > p + pass; --q) w.push_back(q);
    if (letter > 0) {
        out.letters.insert(out.letters.end(), w.begin(), w.end());
    } else {
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.letters.push_back(-*it);
    }
}

}  // namespace detail

/// 0-framed r-cable of a knot presented as a braid closure: every letter is
/// replaced by the block word above and -writhe full twists on the first
/// cable's r strands are appended to cancel the blackboard framing.
inline CabledBraid cable_braid(const BraidWord& b, int r) {
    if (r < 1) throw Error(errc::index_range, "cable width must be >= 1");
    if (!b.closure_is_knot())
        throw Error(errc::multi_component, "cabling is supported for knot closures only");
    CabledBraid out;
    out.original = b;
    out.cable_width = r;
    if (r == 1) {
        out.word = b;
        return out;
    }
    if (b.strands * r > kMaxStrands)
        throw Error(errc::capacity, "cabled braid exceeds the strand bound");
    out.word.strands = b.strands * r;
    for (int l : b.letters) detail::append_cabled_letter(out.word, l, r);
    const int w = b.writhe();
    out.framing_full_twists = -w;
    if (w != 0) {
        BraidWord ft = full_twist_word(out.word.strands, TwistRegion{1, r});
        for (int i = 0; i < std::abs(w); ++i) out.word.append(w > 0 ? ft.inverse() : ft);
    }
    out.word.validate();
    return out;
}

/// J_2 of the 0-framed r-cable: (t^{1/2} + t^{-1/2}) V, carried in A as
/// (A^2 + A^-2) times the Jones polynomial of the cabled word. The 0-cable
/// is the empty link, whose J_2 is the constant -1 (the empty bracket is
/// 1/delta under the closure normalization).
inline Laurent cabled_j2(const BraidWord& b, int r) {
    if (r == 0) return Laurent::constant(Var::A, -1);
    Laurent v = jones(cable_braid(b, r).word);
    return v * Laurent::from_terms(Var::A, {{-2, 1}, {2, 1}});
}

/// Colored Jones polynomial J_N of a knot closure, N >= 2, via the cabling
/// expansion
///   J_{N'+1} = sum_{j=0}^{[N'/2]} (-1)^j binom(N'-j, j) J_2(L^{(N'-2j)})
/// with N' = N - 1. J_2 is (t^{1/2}+t^{-1/2}) V identically.
inline Laurent colored_jones(const BraidWord& b, int N) {
    if (N < 2) throw Error(errc::index_range, "colored Jones needs N >= 2");
    const int np = N - 1;
    Laurent acc = Laurent::zero(Var::A);
    auto binom = [](int a, int k) {
        Int r = 1;
        for (int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int j = 0; j <= np / 2; ++j) {
        Int c = binom(np - j, j);
        if (j % 2 == 1) c = -c;
        acc += cabled_j2(b, np - 2 * j).shifted(0, c);
    }
    return acc;
}

/// Belt-trick commutation: the full twist on the rn cabled strands is the
/// cable of the full twist on the n original strands. Twisting the 0-framed
/// cable transports the framing, so the surgered cable is the m n^2-framed
/// cable of the twisted knot; restoring the 0-framing with -m n^2 full
/// twists on the r cable strands must reproduce the 0-framed cable of the
/// twisted knot exactly (as Jones polynomials of the closures).
inline bool belt_trick_check(const TwistFamily& fam, int r, int m) {
    const int n = fam.region.width;
    // Cable first, twist the cabled region, restore the cable framing.
    CabledBraid cab = cable_braid(fam.base, r);
    TwistRegion cabled_region{(fam.region.first_strand - 1) * r + 1, n * r};
    TwistFamily lhs_family{cab.word, cabled_region, fam.insertion};
    BraidWord lhs_word = with_twists(lhs_family, m);
    if (r >= 2 && m > 0) {
        BraidWord ft = full_twist_word(lhs_word.strands, TwistRegion{1, r});
        for (int i = 0; i < m * n * n; ++i) lhs_word.append(ft.inverse());
    }
    Laurent lhs = jones(lhs_word);
    // Twist first, then take the 0-framed cable.
    BraidWord twisted = with_twists(fam, m);
    Laurent rhs = jones(cable_braid(twisted, r).word);
    return lhs == rhs;
}

}  // namespace jt
