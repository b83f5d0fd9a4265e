#pragma once

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "jonestwist/common.hpp"

namespace jt {

/// A braid word: strand count plus a sequence of signed generator indices.
/// Letter +i is sigma_i, letter -i is its inverse; 1 <= |i| <= strands-1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int k, std::vector<int> w) : strands(k), letters(std::move(w)) { validate(); }

    void validate() const {
        if (strands < 1) throw Error(errc::parse_error, "strand count must be positive");
        for (int l : letters)
            if (l == 0 || std::abs(l) > strands - 1)
                throw Error(errc::index_range,
                            "generator index " + std::to_string(l) + " out of range for " +
                                std::to_string(strands) + " strands");
    }

    int writhe() const {
        int w = 0;
        for (int l : letters) w += l > 0 ? 1 : -1;
        return w;
    }

    /// Permutation induced on strand positions (0-based), start to end.
    std::vector<int> permutation() const {
        std::vector<int> p(static_cast<std::size_t>(strands));
        std::iota(p.begin(), p.end(), 0);
        for (int l : letters) {
            int i = std::abs(l) - 1;
            std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
        }
        return p;
    }

    /// Number of link components of the closure.
    int component_count() const {
        std::vector<int> p = permutation();
        std::vector<bool> seen(p.size(), false);
        int cycles = 0;
        for (std::size_t s = 0; s < p.size(); ++s) {
            if (seen[s]) continue;
            ++cycles;
            std::size_t cur = s;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = static_cast<std::size_t>(p[cur]);
            }
        }
        return cycles;
    }

    bool closure_is_knot() const { return component_count() == 1; }

    BraidWord inverse() const {
        BraidWord r;
        r.strands = strands;
        r.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
        return r;
    }

    BraidWord mirrored() const {
        BraidWord r = *this;
        for (int& l : r.letters) l = -l;
        return r;
    }

    BraidWord& append(const BraidWord& o) {
        if (o.strands > strands) throw Error(errc::index_range, "appended word needs more strands");
        letters.insert(letters.end(), o.letters.begin(), o.letters.end());
        return *this;
    }

    std::string str() const {
        std::string s = "strands=" + std::to_string(strands);
        for (int l : letters) s += " " + std::to_string(l);
        return s;
    }
};

/// Parses the braid-word text format: whitespace-separated signed integers
/// with an optional leading "strands=k" header. Without the header the
/// strand count is inferred as max |i| + 1. Errors carry the byte offset of
/// the offending token.
inline BraidWord parse_braid(const std::string& text) {
    BraidWord b;
    bool have_header = false;
    std::vector<int> letters;
    std::size_t pos = 0;
    bool first_token = true;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string tok = text.substr(start, pos - start);
        if (first_token && tok.rfind("strands=", 0) == 0) {
            first_token = false;
            try {
                std::size_t used = 0;
                int k = std::stoi(tok.substr(8), &used);
                if (used != tok.size() - 8 || k < 1) throw std::invalid_argument("bad strand count");
                b.strands = k;
                have_header = true;
            } catch (const std::exception&) {
                throw Error(errc::parse_error,
                            "malformed strands header at byte " + std::to_string(start));
            }
            continue;
        }
        first_token = false;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("trailing characters");
            if (v == 0) throw std::invalid_argument("zero letter");
            letters.push_back(v);
        } catch (const std::exception&) {
            throw Error(errc::parse_error,
                        "malformed braid letter '" + tok + "' at byte " + std::to_string(start));
        }
    }
    if (!have_header) {
        int m = 0;
        for (int l : letters) m = std::max(m, std::abs(l));
        b.strands = m + 1;
    }
    b.letters = std::move(letters);
    b.validate();
    return b;
}

}  // namespace jt
