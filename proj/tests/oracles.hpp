#pragma once

// Independent reference computations used as test oracles. These deliberately
// avoid the TL-algebra machinery: the bracket below is the plain Kauffman
// state sum over all 2^c smoothings with union-find circle counting.

#include <numeric>
#include <vector>

#include "jonestwist/braid.hpp"
#include "jonestwist/laurent.hpp"

namespace oracle {

class UnionFind {
public:
    int make() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }
    int find(int a) {
        while (parent_[static_cast<std::size_t>(a)] != a)
            a = parent_[static_cast<std::size_t>(a)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
        return a;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }

private:
    std::vector<int> parent_;
};

/// Kauffman bracket of a braid closure by brute-force state sum; exponential
/// in the crossing count, fine for words up to ~20 letters.
inline jt::Laurent state_sum_bracket(const jt::BraidWord& b) {
    using jt::Laurent;
    const int k = b.strands;
    const std::size_t c = b.letters.size();
    Laurent total = Laurent::zero(jt::Var::A);
    const Laurent delta = jt::delta_poly();
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        UnionFind uf;
        std::vector<int> wire(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) wire[static_cast<std::size_t>(s)] = uf.make();
        std::vector<int> start = wire;
        int a_exponent = 0;
        for (std::size_t pos = 0; pos < c; ++pos) {
            int letter = b.letters[pos];
            int i = std::abs(letter) - 1;
            // Smoothing choice: bit 0 is the identity smoothing, bit 1 the
            // cup-cap. sigma_i = A (identity) + A^-1 (cup-cap); inverse swaps.
            bool cupcap = (mask >> pos) & 1;
            if (!cupcap) {
                a_exponent += letter > 0 ? 1 : -1;
            } else {
                a_exponent += letter > 0 ? -1 : 1;
                uf.unite(wire[static_cast<std::size_t>(i)], wire[static_cast<std::size_t>(i + 1)]);
                int fresh = uf.make();
                wire[static_cast<std::size_t>(i)] = fresh;
                wire[static_cast<std::size_t>(i + 1)] = fresh;
            }
        }
        for (int s = 0; s < k; ++s)
            uf.unite(wire[static_cast<std::size_t>(s)], start[static_cast<std::size_t>(s)]);
        int loops = uf.classes();
        Laurent term = Laurent::monomial(jt::Var::A, a_exponent);
        for (int l = 1; l < loops; ++l) term *= delta;
        total += term;
    }
    return total;
}

}  // namespace oracle
