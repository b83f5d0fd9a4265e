#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "jonestwist/common.hpp"

namespace jt {

/// Largest supported strand count. C_12 = 208012 basis diagrams; beyond this
/// the action tables stop fitting a desk machine and we refuse rather than
/// thrash.
inline constexpr int kMaxStrands = 12;

namespace detail {

/// paths[i][h] = number of balanced completions of a bracket sequence of
/// length 2n from position i at nesting height h.
inline const std::vector<std::vector<std::uint64_t>>& dyck_paths_table(int n) {
    static std::array<std::vector<std::vector<std::uint64_t>>, kMaxStrands + 1> cache;
    auto& table = cache.at(static_cast<std::size_t>(n));
    if (table.empty()) {
        std::vector<std::vector<std::uint64_t>> t(
            static_cast<std::size_t>(2 * n + 1),
            std::vector<std::uint64_t>(static_cast<std::size_t>(n + 2), 0));
        t[static_cast<std::size_t>(2 * n)][0] = 1;
        for (int i = 2 * n - 1; i >= 0; --i)
            for (int h = 0; h <= n; ++h) {
                std::uint64_t v = t[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(h + 1)];
                if (h > 0) v += t[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(h - 1)];
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] = v;
            }
        table = std::move(t);
    }
    return table;
}

}  // namespace detail

/// Noncrossing perfect matching of 2n boundary points of a square: points
/// 0..n-1 on the left edge top to bottom, points n..2n-1 on the right edge
/// top to bottom (point n+k is the k-th right point). These are the basis
/// diagrams of the Temperley-Lieb algebra TL_n; there are C_n of them.
///
/// Planarity is expressed in the boundary walk order left-top ..
/// left-bottom, right-bottom .. right-top; in that circular order a matching
/// is noncrossing exactly when it is a balanced bracket sequence.
class PlanarMatching {
public:
    PlanarMatching(int n, std::vector<std::int32_t> pairing)
        : n_(n), pair_(std::move(pairing)) {
        validate();
    }

    /// The identity diagram: left point k joined to right point k.
    static PlanarMatching identity(int n) {
        check_strands(n);
        std::vector<std::int32_t> p(static_cast<std::size_t>(2 * n));
        for (int k = 0; k < n; ++k) {
            p[static_cast<std::size_t>(k)] = n + k;
            p[static_cast<std::size_t>(n + k)] = k;
        }
        return PlanarMatching(n, std::move(p));
    }

    /// The diagram of the generator e_i (1 <= i <= n-1): cup joining left
    /// points i-1 and i, cap joining right points i-1 and i, all other
    /// strands straight through.
    static PlanarMatching generator(int n, int i) {
        check_strands(n);
        if (i < 1 || i > n - 1) throw Error(errc::index_range, "generator index out of range");
        PlanarMatching d = identity(n);
        d.pair_[static_cast<std::size_t>(i - 1)] = i;
        d.pair_[static_cast<std::size_t>(i)] = i - 1;
        d.pair_[static_cast<std::size_t>(n + i - 1)] = n + i;
        d.pair_[static_cast<std::size_t>(n + i)] = n + i - 1;
        return d;
    }

    int n() const { return n_; }
    int partner(int p) const { return pair_[static_cast<std::size_t>(p)]; }
    const std::vector<std::int32_t>& pairing() const { return pair_; }

    bool operator==(const PlanarMatching& o) const { return n_ == o.n_ && pair_ == o.pair_; }

    /// Position of point p in the circular boundary walk; the map is an
    /// involution on indices, so it also sends positions back to points.
    static int boundary_index(int n, int p) { return p < n ? p : 3 * n - 1 - p; }
    int boundary_position(int p) const { return boundary_index(n_, p); }
    int point_at_boundary(int q) const { return boundary_index(n_, q); }

    /// Number of diagrams for a given strand count: the Catalan number C_n.
    static std::uint64_t count(int n) {
        check_strands(n);
        return detail::dyck_paths_table(n)[0][0];
    }

    /// Deterministic index in balanced-bracket order, 0 .. C_n - 1.
    std::uint64_t rank() const {
        const auto& paths = detail::dyck_paths_table(n_);
        std::uint64_t r = 0;
        int h = 0;
        for (int q = 0; q < 2 * n_; ++q) {
            bool open = boundary_position(partner(point_at_boundary(q))) > q;
            if (open) {
                ++h;
            } else {
                r += paths[static_cast<std::size_t>(q + 1)][static_cast<std::size_t>(h + 1)];
                --h;
            }
        }
        return r;
    }

    static PlanarMatching unrank(int n, std::uint64_t r) {
        check_strands(n);
        if (r >= count(n)) throw Error(errc::index_range, "matching rank out of range");
        const auto& paths = detail::dyck_paths_table(n);
        std::vector<std::int32_t> pairing(static_cast<std::size_t>(2 * n), -1);
        std::vector<int> stack;
        int h = 0;
        for (int q = 0; q < 2 * n; ++q) {
            std::uint64_t with_open = paths[static_cast<std::size_t>(q + 1)][static_cast<std::size_t>(h + 1)];
            if (r < with_open) {
                stack.push_back(q);
                ++h;
            } else {
                r -= with_open;
                int qo = stack.back();
                stack.pop_back();
                --h;
                int a = boundary_index(n, qo);
                int b = boundary_index(n, q);
                pairing[static_cast<std::size_t>(a)] = b;
                pairing[static_cast<std::size_t>(b)] = a;
            }
        }
        return PlanarMatching(n, std::move(pairing));
    }

private:
    static void check_strands(int n) {
        if (n < 1) throw Error(errc::index_range, "strand count must be positive");
        if (n > kMaxStrands) throw Error(errc::capacity, "strand count exceeds supported bound");
    }

    void validate() const {
        check_strands(n_);
        if (pair_.size() != static_cast<std::size_t>(2 * n_))
            throw Error(errc::internal, "pairing size mismatch");
        for (int p = 0; p < 2 * n_; ++p) {
            int q = partner(p);
            if (q < 0 || q >= 2 * n_ || q == p || partner(q) != p)
                throw Error(errc::internal, "pairing is not a fixed-point-free involution");
        }
        // Noncrossing check: a balanced walk never closes a bracket that is
        // not the most recent open one.
        std::vector<int> stack;
        for (int q = 0; q < 2 * n_; ++q) {
            int p = point_at_boundary(q);
            int qo = boundary_position(partner(p));
            if (qo > q) {
                stack.push_back(q);
            } else {
                if (stack.empty() || stack.back() != qo)
                    throw Error(errc::internal, "pairing has crossing arcs");
                stack.pop_back();
            }
        }
    }

    int n_;
    std::vector<std::int32_t> pair_;
};

}  // namespace jt
