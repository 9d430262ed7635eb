#include "hkverify/fiber.hpp"

#include <doctest.h>

using namespace hkverify;

TEST_CASE("fiber degrees") {
    CHECK(fiber_degrees(1, 9) == FiberDegrees{864, 216});
    CHECK(fiber_degrees(1, 3) == FiberDegrees{72, 72});
    CHECK(square(FiberNsV{4, 27}) == 864);
    CHECK_THROWS_AS(fiber_degrees(1, 1), PreconditionError);
    for (long long m = 1; m <= 10; ++m)
        for (long long d = 1; d <= 10; ++d)
            if (m * d > 1) CHECK(fiber_degrees(m, d) == fiber_degrees_gram(m, d));
}

TEST_CASE("restriction to a smooth fiber") {
    CHECK(restriction_c1_smooth_fiber(1, 1) == 2);
    CHECK(restriction_c1_smooth_fiber(1, 9) == 18);
    for (long long md = 1; md <= 41; md += 2) CHECK(restriction_c1_smooth_fiber(1, md) % 4 == 2);
}

TEST_CASE("subsheaf ranks") {
    CHECK(subsheaf_rank({1, 1, 1}, 1, 9) == 1);
    CHECK(subsheaf_rank({1, 2, 1}, 1, 9) == Rational(13, 9));
    CHECK(subsheaf_rank({2, 2, 2}, 3, 5) == 2);
    CHECK(subsheaf_rank({4, 4, 4}, 1, 9) == 4);
    CHECK(integer_rank_criterion({1, 3, 2}, 1, 9));
    CHECK(subsheaf_rank({1, 3, 2}, 1, 9) == 2);
    CHECK_FALSE(integer_rank_criterion({0, 1, 1}, 1, 9));
    CHECK(integer_rank_criterion({4, 4, 4}, 1, 9));
    CHECK_THROWS_AS(integer_rank_criterion({1, 1, 1}, 1, 7), PreconditionError);

    std::size_t profiles = 0;
    for (long long md = 9; md <= 41; md += 2)
        for (long long a = 0; a <= 4; ++a)
            for (long long b = 0; b <= 4; ++b)
                for (long long c = 0; c <= 4; ++c) {
                    const SubsheafProfile p{a, b, c};
                    const Rational r = subsheaf_rank(p, 1, md);
                    CHECK(r == subsheaf_rank_weighted(p, 1, md));
                    CHECK(integer_rank_criterion(p, 1, md) == is_integer(r));
                    CHECK(integer_rank_criterion(p, 1, md) == (a + b == 2 * c));
                    if (c < 4) CHECK(subsheaf_rank({a, b, c + 1}, 1, md) > r);
                    if (md == 9) ++profiles;
                }
    CHECK(profiles == 125);
}

TEST_CASE("destabilizer margin") {
    CHECK(destabilizer_margin(1, 2) == 3);
    CHECK(destabilizer_margin(2, 4) == 3);
    CHECK(destabilizer_margin(3, 4) == 3);
    CHECK_THROWS_AS(destabilizer_margin(0, 0), PreconditionError);
    const PotentialStabResult r9 = verify_potentialstab(9);
    CHECK(r9.ok);
    CHECK(r9.min_margin == 3);
    CHECK(r9.profiles_checked <= 12);
    for (long long md = 9; md <= 41; md += 2) {
        const PotentialStabResult r = verify_potentialstab(md);
        CHECK(r.ok);
        CHECK(r.min_margin == 3);
        CHECK(r.min_margin_unrestricted == 3);
    }
    CHECK_THROWS_AS(verify_potentialstab(7), PreconditionError);
    CHECK_THROWS_AS(verify_potentialstab(10), PreconditionError);
}

TEST_CASE("slope identity") {
    CHECK(deg_sigma(1, 9) == 108);
    const Rational a1p(7, 3), a2(-5, 2);
    const Rational a1pp = a1p + 2 * Rational(deg_sigma(1, 9));
    CHECK(alpha1_identity_check(a1p, a1pp, a2, 4, 1, 9) == a1p / 2 + a2 / 4 - Rational(3, 2) * 108);
    CHECK_THROWS_AS(alpha1_identity_check(0, 0, 0, 0, 1, 9), PreconditionError);
}

TEST_CASE("monodromy") {
    CHECK(monodromy_fixed_points() == std::set<TorsionElement>{{0, 0, 0, 0}});
    CHECK(monodromy_shear({1, 0, 1, 0}, 2) == TorsionElement{1, 0, 0, 0});
    CHECK(6 % monodromy_group_order() == 0);
    CHECK(monodromy_group_order() == 6);
    std::size_t swap_fixed = 0;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2) {
                    const TorsionElement e{a1, a2, b1, b2};
                    if (monodromy_swap(e, 2) == e) {
                        ++swap_fixed;
                        CHECK(a1 == b1);
                        CHECK(a2 == b2);
                    }
                }
    CHECK(swap_fixed == 4);
    CHECK(invariant_cosets() == std::set<TorsionElement>{{0, 0, 0, 0}});
}
