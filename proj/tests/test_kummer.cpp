#include "hkverify/kummer.hpp"
#include "hkverify/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hkverify;

namespace {

const AbelianSurfaceModel kA1(4, 5);

KummerTwoClass random_class(std::mt19937_64& rng, const AbelianSurfaceModel& m) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    return KummerTwoClass::from_coords(
        m, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
}

}  // namespace

TEST_CASE("bbf examples") {
    const auto d = KummerTwoClass::delta(kA1);
    const auto w = KummerTwoClass::mu(kA1, 1, 0);
    CHECK(bbf(d, d) == -6);
    CHECK(bbf(w, w) == 4);
    const auto h0 = w * 2 - d;
    CHECK(bbf(h0, h0) == 10);
    CHECK_THROWS_AS(bbf(d, KummerTwoClass::delta(AbelianSurfaceModel(4, 7))), PreconditionError);
}

TEST_CASE("fujiki integral") {
    const auto d = KummerTwoClass::delta(kA1);
    CHECK(fujiki_integral(d, d, d, d) == 324);
    for (long long abar = 1; abar <= 5; ++abar) {
        const AbelianSurfaceModel m(4 * abar, 5);
        const auto b = KummerTwoClass::mu(m, 2, 0) - KummerTwoClass::delta(m);  // q(b) = 16 abar - 6
        CHECK(fujiki_integral(b, b, b, b) == 2304 * abar * abar - 1728 * abar + 324);
    }
    const auto al = KummerTwoClass::mu(kA1, 0, 1);
    const auto be = KummerTwoClass::mu(kA1, 0, 0) + d;
    CHECK(fujiki_integral(al, al, be, be) == 3 * bbf(al, al) * bbf(be, be));
}

TEST_CASE("fujiki integral matches the 24-permutation symmetrization") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; ++k) {
        const AbelianSurfaceModel m(2 * (1 + k % 5), 1 + k % 9);
        const auto b1 = random_class(rng, m), b2 = random_class(rng, m), b3 = random_class(rng, m),
                   b4 = random_class(rng, m);
        CHECK(fujiki_integral(b1, b2, b3, b4) == oracle::fujiki_symmetrization(b1, b2, b3, b4));
    }
}

TEST_CASE("c2 pairings and Riemann-Roch") {
    const auto d = KummerTwoClass::delta(kA1);
    CHECK(c2_pair(d, d) == -324);
    for (long long abar = 1; abar <= 4; ++abar) {
        const AbelianSurfaceModel m(4 * abar, 3);
        const auto z = KummerTwoClass::mu(m, 2, 0) - KummerTwoClass::delta(m);
        CHECK(c2_pair(z, z) == 54 * (16 * abar - 6));
    }
    CHECK(c2_pair(KummerTwoClass::mu(kA1, 0, 1), KummerTwoClass::mu(kA1, 0, 1)) == 0);
    CHECK(c2_square() == 756);
    CHECK(-c2_square() / 12 == -63);

    CHECK(riemann_roch(KummerTwoClass::mu(kA1, 0, 0)) == 3);
    CHECK(riemann_roch_from_square(2) == 9);
    for (long long a = 0; a <= 10; ++a)
        CHECK(riemann_roch_from_square(2 * a) == Rational(3, 2) * a * a + Rational(9, 2) * a + 3);
    CHECK_THROWS_AS(riemann_roch_from_square(3), PreconditionError);
}

TEST_CASE("degree-4 pairings and modularity") {
    const auto z = KummerTwoClass::mu(kA1, 1, 2) - KummerTwoClass::delta(kA1);
    CHECK(integrate_degree4(Degree4Pairing::c2(kA1), z, z) == 54 * bbf(z, z));
    const auto z0 = KummerTwoClass::mu(kA1, 3, -1);
    CHECK(integrate_degree4(Degree4Pairing::sym_square(z0), z, z) == fujiki_integral(z0, z0, z, z));
    CHECK(integrate_degree4(Degree4Pairing(kA1), z, z) == 0);

    CHECK(modularity_coefficient(Degree4Pairing::c2(kA1)) == Rational(54));
    CHECK_FALSE(modularity_coefficient(Degree4Pairing::sym_square(KummerTwoClass::mu(kA1, 1, 0))));

    // The pairing map is invertible on the sym part.
    const Degree4Pairing p = Degree4Pairing::sym_product(z, z0) + Degree4Pairing::c2(kA1) * 2;
    const Degree4Pairing back = Degree4Pairing::from_pairing_matrix(kA1, p.pairing_matrix());
    CHECK(back.pairing_matrix() == p.pairing_matrix());
    CHECK(integrate_product(Degree4Pairing::c2(kA1), Degree4Pairing::c2(kA1)) == 756);
}
