#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jonestwist/bivariate.hpp"
#include "jonestwist/laurent.hpp"

namespace jt {

using Json = nlohmann::ordered_json;

/// Wire format for univariate polynomials:
///   {"var": "A", "terms": [[exponent, "coefficient"], ...]}
/// exponents strictly increasing, coefficients as decimal strings.
inline Json to_json(const Laurent& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e, c.str()}));
    return Json{{"var", var_name(f.var())}, {"terms", std::move(terms)}};
}

inline Laurent laurent_from_json(const Json& j) {
    try {
        Var v = var_from_name(j.at("var").get<std::string>());
        std::vector<Laurent::Term> terms;
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2)
                throw Error(errc::parse_error, "polynomial term must be [exponent, coefficient]");
            int e = t[0].get<int>();
            Int c(t[1].get<std::string>());
            terms.emplace_back(e, std::move(c));
        }
        return Laurent::from_terms(v, std::move(terms));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(errc::parse_error, std::string("bad polynomial JSON: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw Error(errc::parse_error, std::string("bad polynomial JSON: ") + ex.what());
    }
}

/// Wire format for bivariate polynomials:
///   {"vars": ["t", "x"], "terms": [[e1, e2, "coefficient"], ...]}
/// terms ordered lexicographically by exponent pair.
inline Json to_json(const Bivariate& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json::array({e.first, e.second, c.str()}));
    return Json{{"vars", Json::array({var_name(f.var1()), var_name(f.var2())})},
                {"terms", std::move(terms)}};
}

inline Bivariate bivariate_from_json(const Json& j) {
    try {
        const auto& vars = j.at("vars");
        if (!vars.is_array() || vars.size() != 2)
            throw Error(errc::parse_error, "expected two variable names");
        Var v1 = var_from_name(vars[0].get<std::string>());
        Var v2 = var_from_name(vars[1].get<std::string>());
        std::vector<Bivariate::Term> terms;
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 3)
                throw Error(errc::parse_error, "bivariate term must be [e1, e2, coefficient]");
            terms.push_back({{t[0].get<int>(), t[1].get<int>()}, Int(t[2].get<std::string>())});
        }
        return Bivariate::from_terms(v1, v2, std::move(terms));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(errc::parse_error, std::string("bad bivariate JSON: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw Error(errc::parse_error, std::string("bad bivariate JSON: ") + ex.what());
    }
}

/// Parses either a univariate or bivariate polynomial, distinguishing on the
/// "var"/"vars" key.
inline bool json_is_bivariate(const Json& j) { return j.contains("vars"); }

}  // namespace jt
