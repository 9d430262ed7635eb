#include "hkverify/appendix.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cstdlib>
#include <numeric>

namespace hkverify {

SemihomResult is_simple_semihom(const IsogenyParams& p) {
    require(p.deg_f >= 1 && p.n >= 1, "is_simple_semihom: deg_f and n must be positive");
    require(p.d0 != 0, "is_simple_semihom: d0 = 0 gives an infinite kernel");
    SemihomResult r;
    r.rank = boost::multiprecision::pow(Integer(p.deg_f), static_cast<unsigned>(p.n));
    r.kernel_order = Integer((p.n + 1) * (p.n + 1)) *
                     boost::multiprecision::pow(Integer(std::llabs(p.d0)), static_cast<unsigned>(2 * p.n));
    r.kernel_coprime = gcd(r.rank, r.kernel_order) == 1;
    r.simple = std::gcd(p.deg_f, (p.n + 1) * std::llabs(p.d0)) == 1;
    return r;
}

Integer zeppola_integral(long long n, long long d0) {
    require(n >= 1, "zeppola_integral: n must be positive");
    return Integer(n + 1) * boost::multiprecision::pow(Integer(d0), static_cast<unsigned>(n));
}

std::vector<JHShape> jh_decompositions(long long r, long long a, long long e) {
    require(r > 0 && e > 0, "jh_decompositions: r and e must be positive");
    std::vector<JHShape> out;
    for (long long r0 = 1; r0 <= r; ++r0) {
        const long long g = std::gcd(r0, e);
        // m r0^2 = r g
        if ((r * g) % (r0 * r0) != 0) continue;
        const long long m = r * g / (r0 * r0);
        // m r0 b0 = a g
        if ((a * g) % (m * r0) != 0) continue;
        const long long b0 = a * g / (m * r0);
        if (std::gcd(r0, std::llabs(b0)) != 1) continue;
        out.push_back({r0, b0, m, g});
    }
    return out;
}

bool forced_stable(long long s0, long long c0, long long e) {
    require(s0 > 0 && e > 0, "forced_stable: s0 and e must be positive");
    require(std::gcd(s0, std::llabs(c0)) == 1, "forced_stable: s0 and c0 must be coprime");
    return std::gcd(s0, e) == 1;
}

SatolloModel satollo_transfer(long long abar, long long d) {
    require(abar > 0, "satollo_transfer: abar must be positive");
    require(d % 2 != 0, "satollo_transfer: d must be odd");
    return {AbelianSurfaceModel(4 * abar, d), {1, 2 * abar}, true};
}

}  // namespace hkverify
