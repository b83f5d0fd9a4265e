#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "jonestwist/skein.hpp"
#include "jonestwist/twist.hpp"
#include "oracles.hpp"

using jt::BraidWord;
using jt::Int;
using jt::Laurent;
using jt::TLVector;
using jt::Var;

namespace {

Laurent poly_a(std::vector<std::pair<int, Int>> terms) {
    return Laurent::from_terms(Var::A, std::move(terms));
}

BraidWord fixture_braid(const std::string& name) {
    std::ifstream in(std::string(JONESTWIST_FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return jt::parse_braid(ss.str());
}

BraidWord random_word(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    BraidWord b;
    b.strands = strands;
    for (int i = 0; i < length; ++i) b.letters.push_back(sgn(rng) ? gen(rng) : -gen(rng));
    return b;
}

}  // namespace

TEST_CASE("braid word parsing") {
    BraidWord b = jt::parse_braid("strands=6 -1 -2 3");
    CHECK(b.strands == 6);
    CHECK(b.letters == std::vector<int>{-1, -2, 3});

    BraidWord inferred = jt::parse_braid("3 -2");
    CHECK(inferred.strands == 4);

    CHECK_THROWS_WITH(jt::parse_braid("strands=2 5"),
                      Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(jt::parse_braid("1 x2"), Catch::Matchers::ContainsSubstring("byte"));

    BraidWord unknot = jt::parse_braid("strands=1");
    CHECK(unknot.strands == 1);
    CHECK(unknot.letters.empty());
}

TEST_CASE("generator action basics") {
    // sigma_1 applied to the identity of TL_2 is A 1 + A^-1 e_1.
    TLVector v = TLVector::identity(2).apply_generator(1, 1);
    const auto& ctx = jt::TLContext::get(2);
    REQUIRE(v.entries().size() == 2);
    for (const auto& [rank, coeff] : v.entries()) {
        if (rank == ctx.identity_rank())
            CHECK(coeff == poly_a({{1, 1}}));
        else
            CHECK(coeff == poly_a({{-1, 1}}));
    }

    // sigma_1 then its inverse is the identity state.
    TLVector w = v.apply_generator(1, -1);
    CHECK(w == TLVector::identity(2));

    CHECK_THROWS_AS(TLVector::identity(2).apply_generator(2, 1), jt::Error);
}

TEST_CASE("closure traces") {
    CHECK(TLVector::identity(1).closure_trace() == Laurent::one(Var::A));
    CHECK(TLVector::identity(2).closure_trace() == jt::delta_poly());

    // Hopf link: sigma_1^2 closure has bracket -A^4 - A^-4.
    BraidWord hopf(2, {1, 1});
    CHECK(jt::bracket(hopf) == poly_a({{4, -1}, {-4, -1}}));
}

TEST_CASE("bracket and jones of small closures") {
    BraidWord unknot(1, {});
    CHECK(jt::bracket(unknot) == Laurent::one(Var::A));
    CHECK(jt::jones(unknot) == Laurent::one(Var::A));

    // Right trefoil: V = t + t^3 - t^4.
    BraidWord trefoil = fixture_braid("trefoil.txt");
    Laurent v = jt::jones_t(trefoil);
    CHECK(v == Laurent::from_terms(Var::t, {{1, 1}, {3, 1}, {4, -1}}));

    // Mirror image substitutes t -> 1/t.
    Laurent vm = jt::jones_t(trefoil.mirrored());
    CHECK(vm == v.mirror());
}

TEST_CASE("bracket matches the state-sum oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int strands = 2 + trial % 3;
        BraidWord b = random_word(rng, strands, 3 + trial % 6);
        CHECK(jt::bracket(b) == oracle::state_sum_bracket(b));
    }
}

TEST_CASE("paper six-braid Jones polynomial") {
    BraidWord b = fixture_braid("paper_6braid.txt");
    REQUIRE(b.closure_is_knot());

    Laurent v = jt::jones(b);
    CHECK(v == oracle::state_sum_bracket(b).shifted(-3 * b.writhe(),
                                                    b.writhe() % 2 == 0 ? 1 : -1));

    auto [coeffs, half] = jt::jones_coefficient_vector(v);
    CHECK_FALSE(half);
    std::vector<Int> table1_m0{1, -3, 8, -14, 19, -23, 23, -20, 16, -9, 4, -1};
    bool forward = coeffs == table1_m0;
    std::vector<Int> reversed(table1_m0.rbegin(), table1_m0.rend());
    bool negated_reverse = false;
    if (!forward) {
        // Reversal renormalizes the sign to the new lowest coefficient.
        std::vector<Int> rev = reversed;
        if (!rev.empty() && rev.front() < 0)
            for (Int& c : rev) c = -c;
        negated_reverse = coeffs == rev;
    }
    CHECK((forward || negated_reverse));
    CHECK(coeffs.size() == 12);  // span 11
}

TEST_CASE("braid relations hold in the representation") {
    for (int n = 3; n <= 6; ++n) {
        TLVector id = TLVector::identity(n);
        for (int i = 1; i + 1 < n; ++i) {
            TLVector lhs = id.apply_generator(i, 1).apply_generator(i + 1, 1).apply_generator(i, 1);
            TLVector rhs = id.apply_generator(i + 1, 1).apply_generator(i, 1).apply_generator(i + 1, 1);
            CHECK(lhs == rhs);
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                TLVector lhs = id.apply_generator(i, 1).apply_generator(j, 1);
                TLVector rhs = id.apply_generator(j, 1).apply_generator(i, 1);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("trace property and Markov moves") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord alpha = random_word(rng, 4, 4);
        BraidWord beta = random_word(rng, 4, 4);
        BraidWord ab = alpha;
        ab.append(beta);
        BraidWord ba = beta;
        ba.append(alpha);
        CHECK(jt::bracket(ab) == jt::bracket(ba));
    }

    // Stabilization multiplies the bracket by -A^{+-3} and fixes Jones.
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord beta = random_word(rng, 3, 5);
        for (int sign : {1, -1}) {
            BraidWord stab = beta;
            stab.strands = 4;
            stab.letters.push_back(sign * 3);
            Laurent expected = jt::bracket(beta).shifted(3 * sign, -1);
            CHECK(jt::bracket(stab) == expected);
            CHECK(jt::jones(stab) == jt::jones(beta));
        }
    }

    // Conjugation invariance of Jones.
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord beta = random_word(rng, 4, 5);
        BraidWord conj;
        conj.strands = 4;
        conj.letters.push_back(2);
        conj.append(beta);
        conj.letters.push_back(-2);
        CHECK(jt::jones(conj) == jt::jones(beta));
    }
}

TEST_CASE("bilinear pairing") {
    TLVector one2 = TLVector::identity(2);
    CHECK(jt::pairing(one2, one2) == jt::delta_poly());

    const auto& ctx = jt::TLContext::get(2);
    TLVector e1 = TLVector::basis(2, ctx.generator_rank(1));
    CHECK(jt::pairing(e1, e1) == jt::delta_poly());

    // pairing(x, y) is the trace of the product by definition.
    std::mt19937 rng(17);
    BraidWord delta2 = jt::full_twist_word(3, jt::TwistRegion{1, 3});
    TLVector x = jt::braid_state(delta2);
    BraidWord w = random_word(rng, 3, 4);
    TLVector y = jt::braid_state(w);
    CHECK(jt::pairing(x, y) == x.multiply(y).closure_trace());

    CHECK_THROWS_AS(jt::pairing(one2, TLVector::identity(3)), jt::Error);
}

TEST_CASE("strand capacity is enforced") {
    CHECK_THROWS_WITH(jt::bracket(BraidWord(13, {})),
                      Catch::Matchers::ContainsSubstring("capacity"));
}
