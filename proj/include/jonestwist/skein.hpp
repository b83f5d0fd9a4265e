#pragma once

#include "jonestwist/braid.hpp"
#include "jonestwist/laurent.hpp"
#include "jonestwist/tl.hpp"

namespace jt {

/// Image of the braid word under the Kauffman representation, applied to the
/// identity state: rho(sigma_i) = A 1 + A^-1 e_i.
inline TLVector braid_state(const BraidWord& b) {
    b.validate();
    TLVector v = TLVector::identity(b.strands);
    for (int l : b.letters) v = v.apply_generator(std::abs(l), l > 0 ? 1 : -1);
    return v;
}

/// Kauffman bracket of the braid closure, normalized so the unknot has
/// bracket 1.
inline Laurent bracket(const BraidWord& b) {
    return braid_state(b).closure_trace();
}

/// Jones polynomial in the A variable: (-A)^{-3w} times the bracket, writhe
/// w. Exponents are multiples of 4 exactly when the closure is a knot; then
/// jones_t gives the usual V(t) with t = A^-4.
inline Laurent jones(const BraidWord& b) {
    Laurent br = bracket(b);
    int w = b.writhe();
    Int sign = (w % 2 == 0) ? 1 : -1;  // (-1)^{-3w} = (-1)^w
    return br.shifted(-3 * w, sign);
}

inline Laurent jones_t(const BraidWord& b) { return a_to_t(jones(b)); }

}  // namespace jt
