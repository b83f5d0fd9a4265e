#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "jonestwist/bivariate.hpp"
#include "jonestwist/json_io.hpp"
#include "jonestwist/laurent.hpp"
#include "jonestwist/rational.hpp"

using jt::Bivariate;
using jt::Int;
using jt::Laurent;
using jt::Rational;
using jt::Var;

namespace {

Laurent poly_t(std::vector<std::pair<int, Int>> terms) {
    return Laurent::from_terms(Var::t, std::move(terms));
}

Laurent random_poly(std::mt19937& rng, Var v = Var::t) {
    std::uniform_int_distribution<int> nterms(0, 8), expo(-10, 10), coef(-9, 9);
    std::vector<std::pair<int, Int>> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) terms.emplace_back(expo(rng), coef(rng));
    return Laurent::from_terms(v, std::move(terms));
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    Laurent one_plus = poly_t({{0, 1}, {1, 1}});
    Laurent one_minus = poly_t({{0, 1}, {1, -1}});
    CHECK(one_plus * one_minus == poly_t({{0, 1}, {2, -1}}));

    Laurent f = poly_t({{-2, 3}, {5, -7}});
    CHECK(f + Laurent::zero(Var::t) == f);

    CHECK(one_plus * poly_t({{0, 1}, {1, -1}, {2, 1}}) == poly_t({{0, 1}, {3, 1}}));

    CHECK_THROWS_AS(one_plus + Laurent::one(Var::A), jt::Error);
}

TEST_CASE("laurent exact division") {
    Laurent one_plus = poly_t({{0, 1}, {1, 1}});
    CHECK(Laurent::exact_divide(poly_t({{0, 1}, {2, -1}}), one_plus) == poly_t({{0, 1}, {1, -1}}));

    // 1 - t^3 - t^2 - t^4 over 1 + t.
    Laurent num = poly_t({{0, 1}, {3, -1}, {2, -1}, {4, -1}});
    CHECK(Laurent::exact_divide(num, one_plus) == poly_t({{0, 1}, {1, -1}, {3, -1}}));

    CHECK_THROWS_WITH(Laurent::exact_divide(one_plus, poly_t({{0, 1}, {2, 1}})),
                      Catch::Matchers::ContainsSubstring("non-exact-division"));
}

TEST_CASE("normalize up to unit") {
    {
        auto n = poly_t({{3, -1}, {4, 1}}).normalize_up_to_unit();  // -t^3 (1 - t)
        CHECK(n.poly == poly_t({{0, 1}, {1, -1}}));
        CHECK(n.exponent == 3);
        CHECK(n.sign == -1);
    }
    {
        auto n = poly_t({{0, 1}, {1, -1}}).normalize_up_to_unit();
        CHECK(n.poly == poly_t({{0, 1}, {1, -1}}));
        CHECK(n.exponent == 0);
        CHECK(n.sign == 1);
    }
    {
        // Trefoil Jones t + t^3 - t^4.
        auto n = poly_t({{1, 1}, {3, 1}, {4, -1}}).normalize_up_to_unit();
        CHECK(n.poly == poly_t({{0, 1}, {2, 1}, {3, -1}}));
        CHECK(n.exponent == 1);
        CHECK(n.sign == 1);
    }
    CHECK_THROWS_AS(Laurent::zero(Var::t).normalize_up_to_unit(), jt::Error);
}

TEST_CASE("evaluation") {
    Laurent one_plus = poly_t({{0, 1}, {1, 1}});
    CHECK(std::abs(one_plus.evaluate({1.0, 0.0}) - std::complex<double>(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(one_plus.evaluate({-1.0, 0.0})) < 1e-14);

    Laurent plastic = Laurent::from_terms(Var::x, {{3, 1}, {1, -1}, {0, -1}});
    CHECK(std::abs(plastic.evaluate({1.3247179572, 0.0})) < 1e-8);

    CHECK_THROWS_AS(poly_t({{-1, 1}}).evaluate({0.0, 0.0}), jt::Error);
}

TEST_CASE("substitution") {
    // (1 - x t) with x -> t^3 collapses to 1 - t^4.
    Bivariate f = Bivariate::from_terms(Var::t, Var::x, {{{0, 0}, 1}, {{1, 1}, -1}});
    CHECK(f.collapse_second(3) == poly_t({{0, 1}, {4, -1}}));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Laurent g = random_poly(rng);
        CHECK(g.substitute_power(1) == g);
        CHECK(g.substitute_power(2).substitute_power(3) == g.substitute_power(6));
        CHECK(g.substitute_power(-2).substitute_power(3) == g.substitute_power(-6));
    }
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Laurent::zero(Var::t));
    }
}

TEST_CASE("normalization reconstructs and is idempotent") {
    std::mt19937 rng(43);
    for (int i = 0; i < 200; ++i) {
        Laurent a = random_poly(rng);
        if (a.is_zero()) continue;
        auto n = a.normalize_up_to_unit();
        CHECK(n.poly.shifted(n.exponent, n.sign) == a);
        auto n2 = n.poly.normalize_up_to_unit();
        CHECK(n2.poly == n.poly);
        CHECK(n2.exponent == 0);
        CHECK(n2.sign == 1);
    }
}

TEST_CASE("exact divide inverts multiplication") {
    std::mt19937 rng(44);
    for (int i = 0; i < 200; ++i) {
        Laurent f = random_poly(rng), g = random_poly(rng);
        if (g.is_zero()) continue;
        CHECK(Laurent::exact_divide(f * g, g) == f);
    }
}

TEST_CASE("gcd and rational reduction") {
    Laurent one_plus = poly_t({{0, 1}, {1, 1}});
    Laurent f = one_plus * poly_t({{0, 2}, {1, -2}});
    Laurent g = one_plus * poly_t({{2, 3}});
    Laurent d = jt::laurent_gcd(f, g);
    CHECK(Laurent::exact_divide(f, d) * d == f);
    CHECK(Laurent::exact_divide(g, d) * d == g);

    Rational r(f, g);
    CHECK(r.numerator() * g == r.denominator() * f);

    std::mt19937 rng(45);
    for (int i = 0; i < 100; ++i) {
        Laurent a = random_poly(rng), b = random_poly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        Rational q(a, b);
        CHECK(q.numerator() * b == q.denominator() * a);
        // Reduced: the gcd of the reduced pair is a unit.
        Laurent gg = jt::laurent_gcd(q.numerator(), q.denominator());
        CHECK(gg.term_count() == 1);
        CHECK(gg.leading_coeff() == 1);
    }
}

TEST_CASE("rational arithmetic") {
    Laurent t1 = poly_t({{1, 1}});
    Rational half(Laurent::one(Var::t), poly_t({{0, 2}}));
    Rational x = Rational::from_poly(t1);
    CHECK(half + half == Rational::one(Var::t));
    CHECK(x / x == Rational::one(Var::t));
    CHECK((half * x) + (half * x) == x);
}

TEST_CASE("json polynomial round trip") {
    std::mt19937 rng(46);
    for (int i = 0; i < 100; ++i) {
        Laurent a = random_poly(rng, Var::A);
        jt::Json j = jt::to_json(a);
        CHECK(jt::laurent_from_json(j) == a);
        // Serialized text round-trips too.
        CHECK(jt::laurent_from_json(jt::Json::parse(j.dump())) == a);
    }
    Bivariate f = Bivariate::from_terms(Var::t, Var::x, {{{0, 0}, 1}, {{1, 1}, -1}, {{-3, 2}, 12}});
    CHECK(jt::bivariate_from_json(jt::to_json(f)) == f);
}

TEST_CASE("bivariate arithmetic and variables") {
    Bivariate a = Bivariate::from_terms(Var::t, Var::x, {{{0, 0}, 1}, {{1, 1}, 1}});
    Bivariate b = Bivariate::from_terms(Var::t, Var::x, {{{0, 0}, 1}, {{1, 1}, -1}});
    Bivariate prod = a * b;
    CHECK(prod == Bivariate::from_terms(Var::t, Var::x, {{{0, 0}, 1}, {{2, 2}, -1}}));
    CHECK(a - a == Bivariate::zero(Var::t, Var::x));
    CHECK_THROWS_AS(a + Bivariate::zero(Var::A, Var::x), jt::Error);
}
