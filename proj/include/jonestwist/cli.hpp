#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jonestwist/colored.hpp"
#include "jonestwist/families.hpp"
#include "jonestwist/json_io.hpp"
#include "jonestwist/mahler.hpp"
#include "jonestwist/roots.hpp"
#include "jonestwist/skein.hpp"
#include "jonestwist/twist.hpp"

namespace jt::cli {

/// Six-decimal rendering used for every reported float (table precision).
inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

/// Full-precision machine rendering.
inline std::string machine(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline Json mahler_json(const MahlerResult& r) {
    Json diag;
    diag["history"] = Json::array();
    for (double h : r.history) diag["history"].push_back(machine(h));
    if (r.max_root_residual > 0) diag["max_root_residual"] = machine(r.max_root_residual);
    if (r.excluded_points > 0) diag["excluded_points"] = r.excluded_points;
    if (!r.note.empty()) diag["note"] = r.note;
    return Json{{"value", fixed6(r.value)},
                {"value_machine", machine(r.value)},
                {"method", mahler_method_name(r.method)},
                {"error_estimate", machine(r.error_estimate)},
                {"flagged", r.flagged},
                {"diagnostics", diag}};
}

inline Json rational_json(const Rational& r) {
    return Json{{"numerator", to_json(r.numerator())}, {"denominator", to_json(r.denominator())}};
}

struct ParsedRegion {
    int first = 1;
    int width = 2;
};

inline ParsedRegion parse_region(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw Error(errc::usage, "region must be s:n (first strand, width)");
    try {
        ParsedRegion r;
        r.first = std::stoi(s.substr(0, colon));
        r.width = std::stoi(s.substr(colon + 1));
        return r;
    } catch (const std::exception&) {
        throw Error(errc::usage, "region must be s:n with integer fields");
    }
}

inline std::vector<int> parse_m_range(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    try {
        if (dots != std::string::npos) {
            int a = std::stoi(s.substr(0, dots));
            int b = std::stoi(s.substr(dots + 2));
            if (b < a) throw std::invalid_argument("descending range");
            for (int m = a; m <= b; ++m) out.push_back(m);
            return out;
        }
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        if (out.empty()) throw std::invalid_argument("empty");
        return out;
    } catch (const std::exception&) {
        throw Error(errc::usage, "twist counts must be a..b or a comma list");
    }
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(errc::usage, "expected a comma-separated integer list");
        }
    }
    if (out.empty()) throw Error(errc::usage, "expected a nonempty integer list");
    return out;
}

inline BraidWord braid_from_options(const std::string& braid_text, const std::string& braid_file) {
    if (!braid_text.empty() && !braid_file.empty())
        throw Error(errc::usage, "give either --braid or --braid-file, not both");
    if (!braid_text.empty()) return parse_braid(braid_text);
    if (!braid_file.empty()) {
        std::ifstream in(braid_file);
        if (!in) throw Error(errc::usage, "cannot open braid file: " + braid_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_braid(ss.str());
    }
    throw Error(errc::usage, "a braid word is required (--braid or --braid-file)");
}

inline void write_series_csv(const std::string& path, const std::vector<SeriesRecord>& records) {
    std::ofstream out(path);
    if (!out) throw Error(errc::usage, "cannot open CSV output: " + path);
    out << "m,span,L1_norm,mahler,coeffs\n";
    for (const auto& r : records) {
        out << r.m << "," << r.span << "," << r.l1_norm.str() << "," << fixed6(r.mahler) << ",";
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            if (i) out << ";";
            out << r.coeffs[i].str();
        }
        out << "\n";
    }
}

inline Json series_record_json(const SeriesRecord& r) {
    Json coeffs = Json::array();
    for (const Int& c : r.coeffs) coeffs.push_back(c.str());
    Json j{{"m", r.m},
           {"span", r.span},
           {"L1_norm", r.l1_norm.str()},
           {"L1_norm_cleared", r.l1_norm_cleared.str()},
           {"mahler", fixed6(r.mahler)},
           {"mahler_machine", machine(r.mahler)},
           {"coeffs", std::move(coeffs)},
           {"jones", to_json(r.jones_a)}};
    if (r.half_integer_grading) j["half_integer_grading"] = true;
    return j;
}

inline int exit_code_for(const std::string& code) {
    if (code == errc::usage || code == errc::parse_error) return 2;
    if (code == errc::capacity || code == errc::degree_cap) return 3;
    if (code == errc::non_convergence) return 4;
    return 1;
}

/// Runs one invocation; JSON goes to `out`. Returns the process exit status.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kauffman bracket / Jones / Mahler measure calculator for braid closures"};
    app.require_subcommand(1);

    std::string braid_text, braid_file, poly_text, region_text, m_text, csv_path, coeffs_text;
    std::string method = "auto", insert = "end", parity_text;
    double epsilon = 0.2, tolerance = 1e-4;
    int color_n = 3, min_separator = 4;
    int torus_m = 0, torus_n = 0, twistknot_n = 0;
    std::string pretzel_bands;

    auto add_braid = [&](CLI::App* cmd) {
        cmd->add_option("--braid", braid_text, "braid word, e.g. \"strands=6 -1 -2 3\"");
        cmd->add_option("--braid-file", braid_file, "file containing a braid word");
    };

    CLI::App* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a braid closure");
    add_braid(cmd_bracket);

    CLI::App* cmd_jones = app.add_subcommand("jones", "Jones polynomial of a braid closure");
    add_braid(cmd_jones);

    CLI::App* cmd_mahler = app.add_subcommand("mahler", "Mahler measure of a polynomial or braid");
    cmd_mahler->add_option("--poly", poly_text, "polynomial JSON (uni- or bivariate)");
    add_braid(cmd_mahler);
    cmd_mahler->add_option("--method", method, "jensen-roots | quadrature | boyd-lawton | auto");
    cmd_mahler->add_option("--tolerance", tolerance, "Cauchy / refinement tolerance");

    CLI::App* cmd_twist = app.add_subcommand("twist", "twist series of a braid family");
    add_braid(cmd_twist);
    cmd_twist->add_option("--region", region_text, "twist region as s:n")->required();
    cmd_twist->add_option("--m", m_text, "twist counts: a..b or comma list")->required();
    cmd_twist->add_option("--csv", csv_path, "write series rows as CSV");
    cmd_twist->add_option("--insert", insert, "insertion point: end | start");

    CLI::App* cmd_ptx = app.add_subcommand("ptx", "two-variable limit polynomial of a family");
    add_braid(cmd_ptx);
    cmd_ptx->add_option("--region", region_text, "twist region as s:n")->required();
    cmd_ptx->add_option("--tolerance", tolerance, "Boyd-Lawton Cauchy tolerance");

    CLI::App* cmd_blocks = app.add_subcommand("blocks", "block decomposition of a coefficient vector");
    add_braid(cmd_blocks);
    cmd_blocks->add_option("--region", region_text, "twist region as s:n");
    cmd_blocks->add_option("--m", m_text, "twist count");
    cmd_blocks->add_option("--coeffs", coeffs_text, "explicit vector, semicolon-joined integers");
    cmd_blocks->add_option("--parity", parity_text, "odd | even (default: from region width)");
    cmd_blocks->add_option("--min-separator", min_separator, "minimum separator run length");

    CLI::App* cmd_torus = app.add_subcommand("torus", "Jones polynomial of a torus knot");
    cmd_torus->add_option("m", torus_m, "first parameter")->required();
    cmd_torus->add_option("n", torus_n, "second parameter")->required();

    CLI::App* cmd_twistknot = app.add_subcommand("twistknot", "Jones polynomial of a twist knot");
    cmd_twistknot->add_option("n", twistknot_n, "twist knot index")->required();

    CLI::App* cmd_pretzel = app.add_subcommand("pretzel", "bracket and Jones of a pretzel link");
    cmd_pretzel->add_option("bands", pretzel_bands, "band crossing counts a1,a2,...,an")->required();

    CLI::App* cmd_colored = app.add_subcommand("colored", "colored Jones polynomial of a knot");
    add_braid(cmd_colored);
    cmd_colored->add_option("--N", color_n, "color (dimension), N >= 2")->required();

    CLI::App* cmd_roots = app.add_subcommand("roots", "root statistics of a Jones polynomial");
    add_braid(cmd_roots);
    cmd_roots->add_option("--region", region_text, "twist region as s:n");
    cmd_roots->add_option("--m", m_text, "twist count applied before taking roots");
    cmd_roots->add_option("--epsilon", epsilon, "annulus half-width for off-circle counts");
    cmd_roots->add_option("--csv", csv_path, "write root moduli as CSV");

    std::vector<const char*> argv;
    argv.push_back("jonestwist");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            throw Error(errc::usage, e.what());
        }

        Json result;
        if (app.got_subcommand(cmd_bracket)) {
            result = to_json(bracket(braid_from_options(braid_text, braid_file)));
        } else if (app.got_subcommand(cmd_jones)) {
            Laurent v = jones(braid_from_options(braid_text, braid_file));
            bool integral = true;
            for (const auto& [e, c] : v.terms())
                if (e % 4 != 0) integral = false;
            result = integral && !v.is_zero() ? to_json(a_to_t(v)) : to_json(v);
        } else if (app.got_subcommand(cmd_mahler)) {
            if (!poly_text.empty()) {
                Json pj = Json::parse(poly_text, nullptr, true);
                if (json_is_bivariate(pj)) {
                    Bivariate f = bivariate_from_json(pj);
                    MahlerResult r = (method == "quadrature")
                                         ? mahler_quadrature(f, 64, tolerance)
                                         : mahler_boyd_lawton(f, {16, 32, 64, 128, 256}, tolerance);
                    result = mahler_json(r);
                } else {
                    result = mahler_json(mahler_univariate(laurent_from_json(pj)));
                }
            } else {
                Laurent v = jones(braid_from_options(braid_text, braid_file));
                result = mahler_json(mahler_univariate(v));
            }
        } else if (app.got_subcommand(cmd_twist)) {
            ParsedRegion reg = parse_region(region_text);
            TwistFamily fam{braid_from_options(braid_text, braid_file),
                            TwistRegion{reg.first, reg.width},
                            insert == "start" ? Insertion::word_start : Insertion::word_end};
            auto records = twist_series(fam, parse_m_range(m_text));
            if (!csv_path.empty()) write_series_csv(csv_path, records);
            result = Json::array();
            for (const auto& r : records) result.push_back(series_record_json(r));
        } else if (app.got_subcommand(cmd_ptx)) {
            ParsedRegion reg = parse_region(region_text);
            TwistFamily fam{braid_from_options(braid_text, braid_file),
                            TwistRegion{reg.first, reg.width}};
            LimitPolynomial lp = recover_limit_polynomial(fam);
            Json coeffs = Json::array();
            for (const auto& c : lp.coefficients) coeffs.push_back(rational_json(c));
            MahlerResult mr = mahler_boyd_lawton(lp.cleared, {16, 32, 64, 128, 256}, tolerance);
            result = Json{{"width", lp.width},
                          {"exponents", lp.exponents},
                          {"limit_polynomial", to_json(lp.cleared)},
                          {"coefficients", std::move(coeffs)},
                          {"holdout_checked", lp.holdout_checked},
                          {"mahler", mahler_json(mr)}};
        } else if (app.got_subcommand(cmd_blocks)) {
            std::vector<Int> vec;
            Parity parity = Parity::odd;
            if (!coeffs_text.empty()) {
                std::stringstream ss(coeffs_text);
                std::string tok;
                while (std::getline(ss, tok, ';')) vec.emplace_back(tok);
                if (parity_text.empty())
                    throw Error(errc::usage, "--parity is required with --coeffs");
            } else {
                ParsedRegion reg = parse_region(region_text);
                auto ms = parse_m_range(m_text);
                if (ms.size() != 1) throw Error(errc::usage, "blocks needs a single --m value");
                TwistFamily fam{braid_from_options(braid_text, braid_file),
                                TwistRegion{reg.first, reg.width}};
                auto records = twist_series(fam, ms);
                vec = records[0].coeffs;
                parity = reg.width % 2 == 1 ? Parity::odd : Parity::even;
            }
            if (!parity_text.empty()) {
                if (parity_text != "odd" && parity_text != "even")
                    throw Error(errc::usage, "--parity must be odd or even");
                parity = parity_text == "odd" ? Parity::odd : Parity::even;
            }
            BlockDecomposition bd =
                detect_blocks(vec, parity, static_cast<std::size_t>(min_separator));
            Json blocks = Json::array();
            for (const auto& b : bd.blocks) {
                Json c = Json::array();
                for (const Int& x : b.coeffs) c.push_back(x.str());
                blocks.push_back(Json{{"start", b.start}, {"coeffs", std::move(c)}});
            }
            Json seps = Json::array();
            for (const auto& s : bd.separators)
                seps.push_back(Json{{"start", s.start}, {"length", s.length}, {"alpha", s.alpha.str()}});
            result = Json{{"parity", parity == Parity::odd ? "odd" : "even"},
                          {"blocks", std::move(blocks)},
                          {"separators", std::move(seps)}};
        } else if (app.got_subcommand(cmd_torus)) {
            Laurent v = torus_jones(torus_m, torus_n);
            bool integral = true;
            for (const auto& [e, c] : v.terms())
                if (e % 4 != 0) integral = false;
            Json pj = integral && !v.is_zero() ? to_json(a_to_t(v)) : to_json(v);
            result = Json{{"jones", std::move(pj)},
                          {"mahler", mahler_json(mahler_univariate(v))}};
        } else if (app.got_subcommand(cmd_twistknot)) {
            Laurent v = twist_knot_jones(twistknot_n);
            result = Json{{"jones", to_json(v)}, {"mahler", mahler_json(mahler_univariate(v))}};
        } else if (app.got_subcommand(cmd_pretzel)) {
            PretzelParams params{parse_int_list(pretzel_bands)};
            Laurent br = pretzel_bracket(params);
            result = Json{{"bracket", to_json(br)},
                          {"jones_normalized", to_json(br.normalize_up_to_unit().poly)},
                          {"mahler", mahler_json(mahler_univariate(br))}};
        } else if (app.got_subcommand(cmd_colored)) {
            Laurent j = colored_jones(braid_from_options(braid_text, braid_file), color_n);
            result = Json{{"N", color_n},
                          {"colored_jones", to_json(j)},
                          {"mahler", mahler_json(mahler_univariate(j))}};
        } else if (app.got_subcommand(cmd_roots)) {
            BraidWord b = braid_from_options(braid_text, braid_file);
            Laurent v;
            if (!m_text.empty()) {
                if (region_text.empty())
                    throw Error(errc::usage, "--m needs --region for the twist family");
                ParsedRegion reg = parse_region(region_text);
                auto ms = parse_m_range(m_text);
                if (ms.size() != 1) throw Error(errc::usage, "roots needs a single --m value");
                TwistFamily fam{b, TwistRegion{reg.first, reg.width}};
                v = twist_series(fam, ms)[0].jones_a;
            } else {
                v = jones(b);
            }
            bool integral = true;
            for (const auto& [e, c] : v.terms())
                if (e % 4 != 0) integral = false;
            Laurent poly = integral && !v.is_zero() ? a_to_t(v) : v;
            RootSet rs = find_roots(poly);
            UnitCircleStats st = unit_circle_stats(rs, epsilon);
            double jensen = rs.leading_abs * st.outside_product;
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw Error(errc::usage, "cannot open CSV output: " + csv_path);
                csv << "modulus\n";
                for (const auto& r : rs.roots) csv << machine(std::abs(r.value)) << "\n";
            }
            result = Json{{"variable", var_name(rs.variable)},
                          {"degree", rs.degree},
                          {"epsilon", machine(epsilon)},
                          {"outside_count", st.outside_count},
                          {"inside_count", st.inside_count},
                          {"distinct_roots", st.distinct_count},
                          {"outside_product", machine(st.outside_product)},
                          {"jensen_mahler", fixed6(jensen)},
                          {"jensen_mahler_machine", machine(jensen)},
                          {"max_residual", machine(rs.max_residual())},
                          {"all_converged", rs.all_converged}};
        }

        out << result.dump(2) << "\n";
        return 0;
    } catch (const Error& e) {
        Json ej{{"error", Json{{"code", e.code()}, {"message", e.what()}}}};
        out << ej.dump(2) << "\n";
        err << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        Json ej{{"error", Json{{"code", errc::internal}, {"message", e.what()}}}};
        out << ej.dump(2) << "\n";
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace jt::cli
