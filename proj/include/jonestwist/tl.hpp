#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "jonestwist/laurent.hpp"
#include "jonestwist/matching.hpp"

namespace jt {

/// Product of two basis diagrams: d1's right edge glued to d2's left edge.
/// Returns the number of closed loops removed and the resulting diagram, so
/// that the algebra product is delta^loops * result.
inline std::pair<int, PlanarMatching> tl_multiply(const PlanarMatching& d1,
                                                  const PlanarMatching& d2) {
    if (d1.n() != d2.n()) throw Error(errc::variable_mismatch, "strand counts differ");
    const int n = d1.n();
    // Output points: d1's left points keep labels 0..n-1; d2's right points
    // become labels n..2n-1. The glued junction nodes are d1-right k = d2-left k.
    std::vector<std::int32_t> out(static_cast<std::size_t>(2 * n), -1);
    std::vector<bool> junction_seen(static_cast<std::size_t>(n), false);

    auto walk_from = [&](bool start_in_d1, int start) {
        bool in_d1 = start_in_d1;
        int p = start;
        while (true) {
            int q = in_d1 ? d1.partner(p) : d2.partner(p);
            if (in_d1 && q < n) return std::pair<bool, int>{true, q};    // d1 left
            if (!in_d1 && q >= n) return std::pair<bool, int>{false, q};  // d2 right
            int j = in_d1 ? q - n : q;  // junction index
            junction_seen[static_cast<std::size_t>(j)] = true;
            // Hop across the junction into the other diagram.
            in_d1 = !in_d1;
            p = in_d1 ? n + j : j;
        }
    };

    for (int p = 0; p < 2 * n; ++p) {
        if (out[static_cast<std::size_t>(p)] != -1) continue;
        // d1-left points and d2-right points both carry their output labels
        // in their own diagram's indexing.
        auto [landed_d1, q] = walk_from(p < n, p);
        out[static_cast<std::size_t>(p)] = q;
        out[static_cast<std::size_t>(q)] = p;
    }

    // Loops are junction cycles never reached from the boundary; they
    // alternate d1 arcs (between d1-right points) and d2 arcs (between
    // d2-left points).
    int loops = 0;
    for (int j = 0; j < n; ++j) {
        if (junction_seen[static_cast<std::size_t>(j)]) continue;
        ++loops;
        int cur = j;
        do {
            junction_seen[static_cast<std::size_t>(cur)] = true;
            int j2 = d1.partner(n + cur) - n;
            junction_seen[static_cast<std::size_t>(j2)] = true;
            cur = d2.partner(j2);
        } while (cur != j);
    }
    return {loops, PlanarMatching(n, std::move(out))};
}

/// Number of circles formed when the diagram is closed by arcs joining left
/// point k to right point k (the trace closure).
inline int closure_loop_count(const PlanarMatching& d) {
    const int n = d.n();
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    int loops = 0;
    for (int p = 0; p < 2 * n; ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        ++loops;
        int cur = p;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            int q = d.partner(cur);
            seen[static_cast<std::size_t>(q)] = true;
            cur = q < n ? q + n : q - n;  // closure arc
        }
    }
    return loops;
}

/// Precomputed tables for TL_n on the basis of noncrossing matchings: the
/// right action of each generator e_i and the trace-closure loop counts.
/// Built once per strand count and shared; immutable afterwards.
class TLContext {
public:
    struct Action {
        std::uint32_t target;
        std::uint8_t loops;
    };

    static const TLContext& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<TLContext>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(n);
        if (it == registry.end())
            it = registry.emplace(n, std::unique_ptr<TLContext>(new TLContext(n))).first;
        return *it->second;
    }

    int n() const { return n_; }
    std::uint64_t dimension() const { return basis_.size(); }
    const PlanarMatching& diagram(std::uint32_t rank) const {
        return basis_[static_cast<std::size_t>(rank)];
    }
    std::uint32_t identity_rank() const { return identity_rank_; }
    std::uint32_t generator_rank(int i) const {
        return generator_ranks_[static_cast<std::size_t>(i - 1)];
    }

    /// Right action d * e_i on basis diagram of the given rank.
    Action act(std::uint32_t rank, int i) const {
        if (i < 1 || i >= n_) throw Error(errc::index_range, "generator index out of range");
        return actions_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(rank)];
    }

    int closure_loops(std::uint32_t rank) const {
        return closure_loops_[static_cast<std::size_t>(rank)];
    }

private:
    explicit TLContext(int n) : n_(n) {
        const std::uint64_t dim = PlanarMatching::count(n);
        basis_.reserve(static_cast<std::size_t>(dim));
        for (std::uint64_t r = 0; r < dim; ++r) basis_.push_back(PlanarMatching::unrank(n, r));
        identity_rank_ = static_cast<std::uint32_t>(PlanarMatching::identity(n).rank());
        closure_loops_.resize(static_cast<std::size_t>(dim));
        for (std::uint64_t r = 0; r < dim; ++r)
            closure_loops_[static_cast<std::size_t>(r)] =
                static_cast<std::uint8_t>(closure_loop_count(basis_[static_cast<std::size_t>(r)]));
        if (n >= 2) {
            generator_ranks_.resize(static_cast<std::size_t>(n - 1));
            actions_.resize(static_cast<std::size_t>(n - 1));
            for (int i = 1; i < n; ++i) {
                PlanarMatching ei = PlanarMatching::generator(n, i);
                generator_ranks_[static_cast<std::size_t>(i - 1)] =
                    static_cast<std::uint32_t>(ei.rank());
                auto& table = actions_[static_cast<std::size_t>(i - 1)];
                table.resize(static_cast<std::size_t>(dim));
                for (std::uint64_t r = 0; r < dim; ++r) {
                    auto [loops, prod] = tl_multiply(basis_[static_cast<std::size_t>(r)], ei);
                    table[static_cast<std::size_t>(r)] = {
                        static_cast<std::uint32_t>(prod.rank()),
                        static_cast<std::uint8_t>(loops)};
                }
            }
        }
    }

    int n_;
    std::vector<PlanarMatching> basis_;
    std::vector<std::uint32_t> generator_ranks_;
    std::vector<std::vector<Action>> actions_;
    std::vector<std::uint8_t> closure_loops_;
    std::uint32_t identity_rank_ = 0;
};

/// Formal linear combination of TL_n basis diagrams with coefficients in
/// Z[A^{+-1}]. The skein state swept along a braid word.
class TLVector {
public:
    using Entry = std::pair<std::uint32_t, Laurent>;

    explicit TLVector(int n) : n_(n) {}

    /// The identity diagram with coefficient 1.
    static TLVector identity(int n) {
        TLVector v(n);
        v.coeffs_.emplace_back(TLContext::get(n).identity_rank(), Laurent::one(Var::A));
        return v;
    }

    /// A single basis diagram with coefficient 1.
    static TLVector basis(int n, std::uint32_t rank) {
        if (rank >= TLContext::get(n).dimension())
            throw Error(errc::index_range, "basis rank out of range");
        TLVector v(n);
        v.coeffs_.emplace_back(rank, Laurent::one(Var::A));
        return v;
    }

    static TLVector from_entries(int n, std::map<std::uint32_t, Laurent> entries) {
        TLVector v(n);
        for (auto& [r, c] : entries)
            if (!c.is_zero()) v.coeffs_.emplace_back(r, std::move(c));
        return v;
    }

    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Entry>& entries() const { return coeffs_; }

    bool operator==(const TLVector& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const TLVector& o) const { return !(*this == o); }

    TLVector scaled(const Laurent& c) const {
        TLVector v(n_);
        if (c.is_zero()) return v;
        v.coeffs_.reserve(coeffs_.size());
        for (const auto& [r, k] : coeffs_) v.coeffs_.emplace_back(r, k * c);
        return v;
    }

    friend TLVector operator+(const TLVector& a, const TLVector& b) {
        if (a.n_ != b.n_) throw Error(errc::variable_mismatch, "strand counts differ");
        std::map<std::uint32_t, Laurent> acc;
        for (const auto& [r, c] : a.coeffs_) acc.emplace(r, c);
        for (const auto& [r, c] : b.coeffs_) {
            auto [it, inserted] = acc.emplace(r, c);
            if (!inserted) it->second += c;
        }
        return from_entries(a.n_, std::move(acc));
    }

    /// Multiplies on the right by rho(sigma_i^sign) = A^s 1 + A^-s e_i.
    TLVector apply_generator(int i, int sign) const {
        const TLContext& ctx = TLContext::get(n_);
        if (i < 1 || i >= n_) throw Error(errc::index_range, "generator index out of range");
        if (sign != 1 && sign != -1) throw Error(errc::index_range, "sign must be +-1");
        const Laurent d = delta_poly();
        std::map<std::uint32_t, Laurent> acc;
        for (const auto& [r, c] : coeffs_) {
            {  // A^s * [r]
                Laurent term = c.shifted(sign);
                auto [it, inserted] = acc.emplace(r, term);
                if (!inserted) it->second += term;
            }
            {  // A^-s * delta^loops * [r * e_i]
                auto action = ctx.act(r, i);
                Laurent term = c.shifted(-sign);
                for (int l = 0; l < action.loops; ++l) term *= d;
                auto [it, inserted] = acc.emplace(action.target, term);
                if (!inserted) it->second += term;
            }
        }
        return from_entries(n_, std::move(acc));
    }

    /// Full algebra product with another vector.
    TLVector multiply(const TLVector& o) const {
        if (n_ != o.n_) throw Error(errc::variable_mismatch, "strand counts differ");
        const TLContext& ctx = TLContext::get(n_);
        const Laurent d = delta_poly();
        std::map<std::uint32_t, Laurent> acc;
        for (const auto& [ra, ca] : coeffs_) {
            for (const auto& [rb, cb] : o.coeffs_) {
                auto [loops, prod] = tl_multiply(ctx.diagram(ra), ctx.diagram(rb));
                Laurent term = ca * cb;
                for (int l = 0; l < loops; ++l) term *= d;
                std::uint32_t target = static_cast<std::uint32_t>(prod.rank());
                auto [it, inserted] = acc.emplace(target, term);
                if (!inserted) it->second += term;
            }
        }
        return from_entries(n_, std::move(acc));
    }

    /// Markov trace: close each diagram left-to-right and weight by
    /// delta^(loops-1), so the identity on one strand traces to 1 and
    /// tr(1_n) = delta^(n-1).
    Laurent closure_trace() const {
        const TLContext& ctx = TLContext::get(n_);
        const Laurent d = delta_poly();
        Laurent acc = Laurent::zero(Var::A);
        for (const auto& [r, c] : coeffs_) {
            Laurent term = c;
            for (int l = 1; l < ctx.closure_loops(r); ++l) term *= d;
            acc += term;
        }
        return acc;
    }

private:
    int n_;
    std::vector<Entry> coeffs_;  // sorted by rank
};

/// Bilinear pairing <x, y> realized as the trace of the product; pairing the
/// identity against y is the Markov trace of y.
inline Laurent pairing(const TLVector& x, const TLVector& y) {
    return x.multiply(y).closure_trace();
}

}  // namespace jt
