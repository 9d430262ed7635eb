#include "hkverify/blowup.hpp"

#include <doctest.h>

#include <random>

using namespace hkverify;

namespace {

const AbelianSurfaceModel kB1(2, 5);

KummerTwoClass random_class(std::mt19937_64& rng, const AbelianSurfaceModel& m) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    return KummerTwoClass::from_coords(
        m, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
}

}  // namespace

TEST_CASE("fixed-surface pairing") {
    CHECK(vf_pair(kB1, {0, 0}, 1, {0, 0}, 1) == -81);
    CHECK(vf_pair(kB1, {1, 0}, 0, {1, 0}, 0) == 36);
    CHECK(vf_pair(kB1, {1, 0}, 0, {0, 0}, 1) == 0);
}

TEST_CASE("quartic integrals on the blow-up") {
    const auto nd = XTwoClass::nu_delta(kB1);
    const auto d = XTwoClass::exceptional(kB1);
    const auto w = XTwoClass::nu_mu(kB1, {1, 0});
    const auto s = nd + d;
    CHECK(x_quartic(s, s, s, s) == 1296);
    CHECK(x_quartic(d, d, d, d) == 162);
    CHECK(x_quartic(w, d, d, d) == 0);

    const DeltaFourthChain c = delta_fourth_chain(kB1);
    CHECK(c.base_term == 81);
    CHECK(c.mixed_square == Rational(3, 2) * 81);
    CHECK(c.mixed_cube == 81);
    CHECK(c.cube_mixed == 0);
    CHECK(c.d_fourth == Rational(81, 2));
    CHECK(c.total() == 324);
}

TEST_CASE("pullback and pushforward") {
    const AbelianSurfaceModel ma = a_model_of(kB1);
    CHECK(ma == AbelianSurfaceModel(4, 5));
    CHECK(b_model_of(ma) == kB1);
    CHECK_THROWS_AS(b_model_of(AbelianSurfaceModel(2, 5)), PreconditionError);

    CHECK(pullback_rho(KummerTwoClass::delta(ma)) == XTwoClass{kB1, {0, 0}, 1, 1});
    CHECK(pullback_rho(KummerTwoClass::mu(ma, 0, 1)) == XTwoClass{kB1, {0, 1}, 0, 0});
    CHECK(pullback_rho(KummerTwoClass::mu(ma, 1, 0)) == XTwoClass{kB1, {2, 0}, 0, 0});

    CHECK(pushforward_rho(XTwoClass::nu_mu(kB1, {1, 0})) == KummerTwoClass::mu(ma, 2, 0));
    CHECK(pushforward_rho(XTwoClass::nu_delta(kB1)) == KummerTwoClass::delta(ma) * 2);
    CHECK(pushforward_rho(XTwoClass::exceptional(kB1)) == KummerTwoClass::delta(ma) * 2);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const AbelianSurfaceModel m(4 * (1 + k % 3), 1 + 2 * (k % 5));
        const auto c = random_class(rng, m);
        CHECK(pushforward_rho(pullback_rho(c)) == c * 4);
    }
}

TEST_CASE("blow-up degree is 4 on pullbacks") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 50; ++k) {
        const AbelianSurfaceModel m(4 * (1 + k % 3), 1 + 2 * (k % 5));
        const auto a1 = random_class(rng, m), a2 = random_class(rng, m), a3 = random_class(rng, m),
                   a4 = random_class(rng, m);
        CHECK(x_quartic(pullback_rho(a1), pullback_rho(a2), pullback_rho(a3), pullback_rho(a4)) ==
              4 * fujiki_integral(a1, a2, a3, a4));
    }
}

TEST_CASE("first Chern class of the pushforward bundle") {
    const AbelianSurfaceModel ma(4, 5);
    CHECK(ch1_E(kB1, {1, 0}, 0, 0) == KummerTwoClass::mu(ma, 2, 0) - KummerTwoClass::delta(ma));
    CHECK(ch1_E(kB1, {3, 0}, 0, 0) == KummerTwoClass::mu(ma, 6, 0) - KummerTwoClass::delta(ma));
    for (long long x = -3; x <= 3; ++x)
        for (long long y = -3; y <= 3; ++y) CHECK(ch1_E(kB1, {1, 2}, x, y) == ch1_E_closed(kB1, {1, 2}, x, y));
}

TEST_CASE("discriminant pairing closed forms") {
    const AbelianSurfaceModel m(2, 1);
    CHECK(delta_pairing_mu_mu(0, 0, m, {1, 0}) == 108);
    CHECK(delta_pairing_mu_mu(0, 1, m, {1, 0}) == 108);
    CHECK(delta_pairing_mu_mu(0, 2, m, {1, 0}) == 198 * 2);
    CHECK(delta_pairing_mu_delta() == 0);
    CHECK(delta_pairing_delta_delta(0, 0) == -324);
    CHECK(delta_pairing_delta_delta(0, 1) == -324);
    CHECK(delta_pairing_delta_delta(1, 0) == -972);
}

TEST_CASE("closed forms agree with the reduction rules") {
    for (long long abar = 1; abar <= 3; ++abar)
        for (long long d : {1LL, 3LL, 5LL})
            for (long long x = -3; x <= 3; ++x)
                for (long long y = -3; y <= 3; ++y) {
                    const AbelianSurfaceModel mb(2 * abar, d);
                    CHECK(delta_pairing_matrix_blowup(mb, {1, 1}, x, y) ==
                          delta_pairing_matrix_closed(a_model_of(mb), x, y));
                }
}

TEST_CASE("modularity") {
    CHECK(is_modular_E(0, 0).modular);
    CHECK(is_modular_E(0, 0).d == Rational(54));
    CHECK(is_modular_E(0, 1).modular);
    CHECK_FALSE(is_modular_E(0, 2).modular);
    for (long long t = -10; t <= 10; ++t) {
        const bool expect = t == 0 || t == -1;
        CHECK(is_modular_E(t, 0).modular == expect);
        const auto v = is_modular_E(t + 3, 3, AbelianSurfaceModel(4, 7), {2, 1});
        CHECK(v.modular == expect);
        if (expect) CHECK(v.d == Rational(54));
    }
}
