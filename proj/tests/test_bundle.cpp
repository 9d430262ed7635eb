#include "hkverify/bundle.hpp"

#include <doctest.h>

using namespace hkverify;

TEST_CASE("Chern numbers at a = 1") {
    const ChernNumberTable t = chern_numbers(1);
    CHECK(t.ch1_4 == 900);
    CHECK(t.ch4 == Rational(-3, 4));
    CHECK(t.ch1sq_ch2_derived == 45);
    CHECK(t.ch1sq_ch2_paper == 117);
    CHECK(t.chi_E == 9);
    CHECK(t.chi_end == 3);
    CHECK(t.chi_end0 == 0);
    CHECK(t.entries().at("chi-end") == 3);
}

TEST_CASE("Euler characteristics") {
    CHECK(chi_E(1) == 9);
    CHECK(chi_E(2) == 18);
    CHECK(chi_E(0) == 3);
    CHECK(chi_end(7) == 3);
    CHECK(chi_end0(5) == 0);
    for (long long a = 1; a <= 50; ++a) {
        CHECK(chi_end(a) == 3);
        CHECK(chi_end(a) - chi_end0(a) == 3);
        const ChiEndTerms t = chi_end_terms(a);
        CHECK(t.rank_term == 48);
        CHECK(t.c2_term == -63);
        CHECK(t.top_term == 18);
    }
}

TEST_CASE("polynomial identities") {
    const ChernPolynomials p = chern_polynomials();
    CHECK(p.at("ch1-4").to_string() == "2304a^2 - 1728a + 324");
    CHECK(p.at("ch1-ch3").to_string() == "24a^2 - 45a + 27/2");
    CHECK(p.at("ch2-sq").to_string() == "36a^2 - 54a + 27");
    CHECK(p.at("ch4").to_string() == "(3/2)a^2 - (9/2)a + 9/4");
    CHECK(p.at("chi-e").to_string() == "(3/2)a^2 + (9/2)a + 3");
    CHECK(p.at("chi-end").to_string() == "3");
    CHECK(p.at("chi-end0").to_string() == "0");
    CHECK(p.at("ch1sq-ch2-derived").to_string() == "288a^2 - 324a + 81");
    CHECK(p.at("ch1sq-ch2-paper").to_string() == "576a^2 - 540a + 81");

    const Polynomial top = p.at("ch4") * Rational(8) - p.at("ch1-ch3") * Rational(2) + p.at("ch2-sq");
    CHECK(top == Polynomial::constant(18));

    // Both routes to chi(E) agree, and the interpolants reproduce every sample.
    for (long long a = 1; a <= 50; ++a) {
        CHECK(12 + ch2_td2(a) + chern_numbers(a).ch4 == chi_E(a));
        CHECK(p.at("ch1-ch3")(Rational(a)) == chern_numbers(a).ch1_ch3);
        CHECK(ch1sq_ch2_blowup(a) == chern_numbers(a).ch1sq_ch2_derived);
    }
}

TEST_CASE("degree-three decomposition") {
    const GianniTerms g = gianni_decomposition(1);
    CHECK(g.c2_term == -45);
    CHECK(g.td3_term == Rational(-27, 2));
    CHECK(g.quadric_term == 36);
    CHECK(g.linear_term == -9);
    CHECK(g.cubic_term == 24);
    CHECK(g.sum() == Rational(-15, 2));
    CHECK(gianni_decomposition(2).sum() == Rational(39, 2));
    for (long long a = 1; a <= 50; ++a) CHECK(gianni_decomposition(a).sum() == chern_numbers(a).ch1_ch3);
}

TEST_CASE("a-invariant") {
    CHECK(a_invariant() == 72);
    CHECK(AInvariantParts{}.value() == 72);
    CHECK((AInvariantParts{2, 54, 3}.value()) == 18);
}
