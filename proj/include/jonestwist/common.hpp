#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jt {

/// Exact integer coefficient type. Brackets of cabled and highly twisted
/// braids overflow 64 bits quickly, so all ring arithmetic is arbitrary
/// precision.
using Int = boost::multiprecision::cpp_int;

/// Formal variables. All skein computation lives in A (with t = A^-4); t and
/// x appear in reported polynomials and in the two-variable limits.
enum class Var : std::uint8_t { A, t, x };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::A: return "A";
        case Var::t: return "t";
        case Var::x: return "x";
    }
    return "?";
}

inline Var var_from_name(const std::string& s) {
    if (s == "A") return Var::A;
    if (s == "t") return Var::t;
    if (s == "x") return Var::x;
    throw std::invalid_argument("unknown variable name: " + s);
}

/// Error with a stable machine-readable code. The CLI maps these to exit
/// status and error JSON; tests match on the code string.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Stable error codes.
namespace errc {
inline constexpr const char* variable_mismatch = "variable-mismatch";
inline constexpr const char* non_exact_division = "non-exact-division";
inline constexpr const char* zero_input = "zero-input";
inline constexpr const char* capacity = "capacity";
inline constexpr const char* parse_error = "parse-error";
inline constexpr const char* index_range = "index-range";
inline constexpr const char* degree_cap = "degree-cap";
inline constexpr const char* multi_component = "multi-component";
inline constexpr const char* undefined_value = "undefined";
inline constexpr const char* non_convergence = "non-convergence";
inline constexpr const char* internal = "internal";
inline constexpr const char* usage = "usage";
}  // namespace errc

}  // namespace jt
