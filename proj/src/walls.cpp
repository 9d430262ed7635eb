#include "hkverify/walls.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hkverify {

namespace {

RationalVector as_rational(const std::vector<long long>& v) { return RationalVector(v.begin(), v.end()); }

}  // namespace

long long mukai_pair(const GramLattice& h2, const MukaiVector& u, const MukaiVector& v) {
    require(u.ell.size() == h2.rank() && v.ell.size() == h2.rank(), "mukai_pair: incompatible degree-2 parts");
    return -u.r * v.s - v.r * u.s + to_int64(pair(h2, as_rational(u.ell), as_rational(v.ell)));
}

long long ell_square(const GramLattice& h2, const MukaiVector& v) {
    return to_int64(pair(h2, as_rational(v.ell), as_rational(v.ell)));
}

std::vector<WallNumerics> generate_wall_cases() {
    std::vector<WallNumerics> out;
    for (long long ss : {0LL, 2LL, 4LL}) {
        for (long long sv = ss + 1; 2 * sv <= 6 + ss; ++sv) {
            WallNumerics w;
            w.ss = ss;
            w.sv = sv;
            w.n = std::gcd(sv, 6LL);
            w.q_w = Rational(-6, w.n * w.n) * (sv * sv - 6 * ss);
            w.retained = w.q_w < 0;
            for (long long k = 6 / w.n; k <= 6; k += 6 / w.n)
                if (6 % k == 0) w.div_candidates.push_back(k);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<WallNumerics> enumerate_wall_numerics() {
    std::vector<WallNumerics> all = generate_wall_cases();
    std::vector<WallNumerics> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const WallNumerics& w) { return w.retained; });
    return out;
}

bool is_wall_candidate(long long p, long long q, long long x, const AbelianSurfaceModel& model) {
    require(p != 0 || q != 0 || x != 0, "is_wall_candidate: zero class");
    // The lattice is even, so k w with k >= 2 has square divisible by 8 and never equals -6.
    // Non-primitive input therefore falls out below and needs no separate rejection.
    const Rational sq = ns_pair(model, {p, q}, {p, q}) - 6 * Rational(x) * x;
    if (sq != -6) return false;
    const long long div = kummer_divisibility(p, q, x);
    return div == 2 || div == 3 || div == 6;
}

long long ample_threshold(long long abar) { return std::max(12 * abar + 3, 24 * abar * abar + 6 * abar); }

AmpleResult is_ample_h(long long abar, long long d, long long m) {
    require(abar > 0 && d > 0 && m > 0, "is_ample_h: abar, d, m must be positive");
    const AbelianSurfaceModel model(4 * abar, d);
    AmpleResult result;
    result.threshold = ample_threshold(abar);
    result.threshold_met = d > result.threshold;

    // Box bounds. With w = mu(beta) - x delta and tau = (beta, omega_bar), pairing against h = 2m mu(omega_bar) - delta
    // gives 2m tau - 6x. A wall meets the segment from h to 2m mu(omega_bar) iff tau = 0 = 2m tau - 6x, or
    // 0 < m tau <= 3x. Hodge index on NS plus -6 <= beta^2 - 6x^2 < 0 forces beta^2 <= 18/5, hence x <= 1.
    // If tau = 0 then beta^2 = -4 abar p^2 >= -6, so |p| <= 1. If x = 1 then beta^2 = 2 p tau - 4 abar p^2 >= 0,
    // so 0 <= p <= tau / (2 abar) <= 3/2. The box below is one step wider on every side.
    constexpr long long kBoxX = 2;
    constexpr long long kBoxP = 2;
    for (long long x = 0; x <= kBoxX; ++x) {
        const long long tau_lo = (x == 0) ? 0 : 1;
        const long long tau_hi = (x == 0) ? 0 : (3 * x) / m;
        for (long long tau = tau_lo; tau <= tau_hi; ++tau) {
            for (long long p = -kBoxP; p <= kBoxP; ++p) {
                const long long num = tau - 4 * abar * p;
                if (num % d != 0) continue;
                const long long q = num / d;
                const Rational q_w = ns_pair(model, {p, q}, {p, q}) - 6 * Rational(x) * x;
                if (q_w < -6 || q_w >= 0) continue;
                if (x == kBoxX || std::llabs(p) == kBoxP)
                    throw std::logic_error("is_ample_h: candidate on the search box boundary");
                result.verdict = AmpleVerdict::NotAmple;
                result.witness = AmpleWitness{p, q, x, tau > 0, q_w};
                return result;
            }
        }
    }
    result.verdict = result.threshold_met ? AmpleVerdict::Ample : AmpleVerdict::BelowThreshold;
    return result;
}

const char* to_string(AmpleVerdict v) {
    switch (v) {
        case AmpleVerdict::Ample: return "Ample";
        case AmpleVerdict::NotAmple: return "NotAmple";
        case AmpleVerdict::BelowThreshold: return "BelowThreshold";
    }
    return "?";
}

}  // namespace hkverify
