#include "hkverify/appendix.hpp"
#include "hkverify/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

using namespace hkverify;

TEST_CASE("semi-homogeneous simplicity") {
    auto r = is_simple_semihom({4, 2, 3});
    CHECK(r.simple);
    CHECK(r.rank == 16);
    for (long long d0 : {1LL, 3LL, 9LL, 27LL}) {
        r = is_simple_semihom({2, 2, d0});
        CHECK(r.simple);
        CHECK(r.rank == 4);
    }
    CHECK_FALSE(is_simple_semihom({2, 1, 2}).simple);
    CHECK_THROWS_AS(is_simple_semihom({2, 1, 0}), PreconditionError);
    for (long long f = 1; f <= 20; ++f)
        for (long long d0 = 1; d0 <= 20; ++d0)
            for (long long n = 1; n <= 3; ++n) {
                const auto s = is_simple_semihom({f, n, d0});
                CHECK(s.simple == s.kernel_coprime);
            }
}

TEST_CASE("exterior-algebra oracle") {
    const oracle::ExteriorAlgebra alg(2);
    const auto x0 = alg.generator_x(0), y0 = alg.generator_y(0), x1 = alg.generator_x(1), y1 = alg.generator_y(1);
    CHECK(alg.wedge(x0, x0).empty());
    CHECK(alg.wedge(x0, y0) == alg.scale(alg.wedge(y0, x0), -1));
    CHECK(alg.integrate(alg.wedge(alg.wedge(x0, y0), alg.wedge(x1, y1))) == 1);

    // Calibration at n = 1 against the direct value 2 d0.
    for (long long d0 = 1; d0 <= 5; ++d0) CHECK(oracle::zeppola_exterior(1, d0) == 2 * d0);
    CHECK(oracle::zeppola_exterior(1, 5) == 10);
    // For n = 2 the expansion has two cross terms: 2 * d0^2 * (2*2 - 1*1) = 6 d0^2.
    for (long long d0 = 1; d0 <= 5; ++d0) CHECK(oracle::zeppola_exterior(2, d0) == 6 * d0 * d0);
}

TEST_CASE("closed form for the top self-intersection") {
    CHECK(zeppola_integral(1, 5) == 10);
    CHECK(zeppola_integral(2, 1) == 3);
    CHECK(zeppola_integral(3, 2) == 32);
    CHECK_THROWS_AS(zeppola_integral(0, 2), PreconditionError);
}

TEST_CASE("Jordan-Holder shapes") {
    const auto s = jh_decompositions(4, 2, 3);
    CHECK(std::find(s.begin(), s.end(), JHShape{2, 1, 1, 1}) != s.end());
    CHECK(jh_decompositions(4, 1, 3).end() ==
          std::find_if(jh_decompositions(4, 1, 3).begin(), jh_decompositions(4, 1, 3).end(),
                       [](const JHShape& j) { return j.r0 == 2 && j.m == 1; }));
    for (long long r = 1; r <= 12; ++r)
        for (long long a = -10; a <= 10; ++a)
            for (long long e = 1; e <= 10; ++e) {
                const auto fast = jh_decompositions(r, a, e);
                CHECK(fast == oracle::jh_bruteforce(r, a, e));
                for (const auto& j : fast) {
                    CHECK(j.g == std::gcd(j.r0, e));
                    CHECK(j.m * j.r0 * j.r0 == r * j.g);
                    CHECK(j.m * j.r0 * j.b0 == a * j.g);
                    CHECK(std::gcd(j.r0, std::llabs(j.b0)) == 1);
                }
            }
}

TEST_CASE("forced stability") {
    CHECK(forced_stable(2, 9, 3));
    CHECK_FALSE(forced_stable(2, 1, 2));
    CHECK(forced_stable(1, 1, 7));
    CHECK_THROWS_AS(forced_stable(2, 4, 3), PreconditionError);
    for (long long s0 = 1; s0 <= 6; ++s0)
        for (long long e = 1; e <= 30; ++e)
            for (long long c0 = -7; c0 <= 7; ++c0) {
                if (std::gcd(s0, std::llabs(c0)) != 1) continue;
                const auto shapes = oracle::jh_bruteforce(s0 * s0, s0 * c0, e);
                const bool all_m1 =
                    std::all_of(shapes.begin(), shapes.end(), [](const JHShape& j) { return j.m == 1; });
                CHECK(forced_stable(s0, c0, e) == all_m1);
            }
}

TEST_CASE("A-side model transfer") {
    auto s = satollo_transfer(1, 5);
    CHECK(s.model == AbelianSurfaceModel(4, 5));
    CHECK(s.elementary_divisors == std::pair<long long, long long>{1, 2});
    CHECK(s.saturated);
    s = satollo_transfer(2, 7);
    CHECK(s.model == AbelianSurfaceModel(8, 7));
    CHECK(s.elementary_divisors == std::pair<long long, long long>{1, 4});
    CHECK_THROWS_AS(satollo_transfer(1, 4), PreconditionError);
}
