#include "hkverify/lattice.hpp"
#include "hkverify/oracles.hpp"
#include "hkverify/polynomial.hpp"

#include <doctest.h>

using namespace hkverify;

TEST_CASE("rational parsing and rendering") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK_THROWS_AS(parse_rational("4/-2"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
    CHECK_THROWS_AS(parse_rational(""), PreconditionError);
}

TEST_CASE("polynomial interpolation and rendering") {
    const Polynomial p({Rational(9, 4), Rational(-9, 2), Rational(3, 2)});
    CHECK(p.to_string() == "(3/2)a^2 - (9/2)a + 9/4");
    std::vector<Rational> xs, ys;
    for (int a = 1; a <= 5; ++a) {
        xs.emplace_back(a);
        ys.push_back(p(Rational(a)));
    }
    CHECK(Polynomial::interpolate(xs, ys) == p);
    CHECK(Polynomial::constant(3).to_string() == "3");
    CHECK(Polynomial().to_string() == "0");
}

TEST_CASE("gram pairing") {
    const GramLattice l({{4, 3}, {3, 0}});
    CHECK(pair(l, {1, 0}, {1, 0}) == 4);
    CHECK(pair(l, {1, 0}, {0, 1}) == 3);
    CHECK(pair(GramLattice({{2, 0}, {0, -6}}), {0, 1}, {0, 1}) == -6);
    CHECK_THROWS_AS(pair(l, {1}, {1, 0}), PreconditionError);
    CHECK_THROWS_AS(GramLattice({{1, 2}, {3, 4}}), PreconditionError);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(AbelianSurfaceModel(4, 5).lattice()) == -25);
    CHECK(discriminant(GramLattice({{0, 1}, {1, 0}})) == -1);
    CHECK(discriminant(GramLattice({{2, 0}, {0, -6}})) == -12);
}

TEST_CASE("negative-square bound against brute force") {
    CHECK(nocamere_bound(3, 0) == -6);
    CHECK(nocamere_bound(1, 0) == -2);
    const auto worst = oracle::max_negative_square(5, 0, 20);
    REQUIRE(worst);
    CHECK(*worst <= -10);
    for (long long d0 = 1; d0 <= 6; ++d0)
        for (long long qb = 0; qb <= 10; qb += 2) {
            const auto w = oracle::max_negative_square(d0, qb, 40);
            if (w) CHECK(*w <= nocamere_bound(d0, qb));
        }
}

TEST_CASE("divisibility") {
    CHECK(kummer_divisibility(2, 0, -1) == 2);
    CHECK(kummer_divisibility(6, 0, -1) == 6);
    CHECK(kummer_divisibility(1, 0, 0) == 1);
    CHECK(kummer_divisibility(0, 0, 1) == 6);
    CHECK_THROWS_AS(kummer_divisibility(0, 0, 0), PreconditionError);
}

TEST_CASE("moduli cases and theorem hypothesis") {
    CHECK(classify_moduli_case(10, 2));
    CHECK_FALSE(classify_moduli_case(10, 6));
    CHECK(classify_moduli_case(2, 1));
    CHECK_THROWS_AS(classify_moduli_case(10, 4), PreconditionError);

    auto h = theorem_hypothesis(10, 2);
    CHECK(h.accepted);
    CHECK(h.abar == 1);
    h = theorem_hypothesis(138, 6);
    CHECK(h.accepted);
    CHECK(h.abar == 1);
    h = theorem_hypothesis(26, 2);
    CHECK(h.accepted);
    CHECK(h.abar == 2);
    CHECK_FALSE(theorem_hypothesis(10, 6).accepted);
    CHECK_FALSE(theorem_hypothesis(10, 3).accepted);
}

TEST_CASE("abelian surface model preconditions") {
    CHECK_THROWS_AS(AbelianSurfaceModel(3, 5), PreconditionError);
    CHECK_THROWS_AS(AbelianSurfaceModel(0, 5), PreconditionError);
    CHECK(AbelianSurfaceModel(4, 5).lattice().is_even());
}
