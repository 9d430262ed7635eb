#include "hkverify/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>

namespace hkverify::oracle {

Rational fujiki_symmetrization(const KummerTwoClass& b1, const KummerTwoClass& b2, const KummerTwoClass& b3,
                               const KummerTwoClass& b4) {
    const std::array<const KummerTwoClass*, 4> b{&b1, &b2, &b3, &b4};
    std::array<int, 4> perm{0, 1, 2, 3};
    Rational sum = 0;
    do {
        sum += bbf(*b[perm[0]], *b[perm[1]]) * bbf(*b[perm[2]], *b[perm[3]]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return 3 * sum / 8;
}

std::optional<Rational> max_negative_square(long long d0, long long q_beta, long long box) {
    std::optional<Rational> best;
    for (long long u = -box; u <= box; ++u)
        for (long long v = -box; v <= box; ++v) {
            const Rational q = Rational(2 * u * v * d0 + v * v * q_beta);
            if (q < 0 && (!best || q > *best)) best = q;
        }
    return best;
}

ExteriorAlgebra::ExteriorAlgebra(int n) : n_(n) { require(n >= 1 && n <= 8, "ExteriorAlgebra: n out of range"); }

ExteriorAlgebra::Element ExteriorAlgebra::generator_x(int i) const { return {{1u << (2 * i), Rational(1)}}; }

ExteriorAlgebra::Element ExteriorAlgebra::generator_y(int i) const { return {{1u << (2 * i + 1), Rational(1)}}; }

ExteriorAlgebra::Element ExteriorAlgebra::add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [mono, c] : b) out[mono] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

ExteriorAlgebra::Element ExteriorAlgebra::scale(const Element& a, const Rational& s) const {
    Element out;
    if (s == 0) return out;
    for (const auto& [mono, c] : a) out[mono] = c * s;
    return out;
}

ExteriorAlgebra::Element ExteriorAlgebra::wedge(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma & mb) continue;
            // Sign of sorting: count pairs (i in ma, j in mb) with i > j.
            int inversions = 0;
            for (unsigned bits = mb; bits; bits &= bits - 1) {
                const unsigned j = std::countr_zero(bits);
                inversions += std::popcount(ma >> (j + 1));
            }
            Rational term = ca * cb;
            if (inversions % 2) term = -term;
            out[ma | mb] += term;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Rational ExteriorAlgebra::integrate(const Element& a) const {
    const unsigned top = (1u << (2 * n_)) - 1;
    auto it = a.find(top);
    return it == a.end() ? Rational(0) : it->second;
}

Rational zeppola_exterior(int n, long long d0) {
    const ExteriorAlgebra alg(n);
    ExteriorAlgebra::Element c1;
    for (int i = 0; i < n; ++i) {
        ExteriorAlgebra::Element ys;
        for (int j = 0; j < n; ++j) ys = alg.add(ys, alg.scale(alg.generator_y(j), j == i ? 2 : 1));
        c1 = alg.add(c1, alg.wedge(alg.generator_x(i), ys));
    }
    c1 = alg.scale(c1, Rational(d0));
    ExteriorAlgebra::Element power{{0u, Rational(1)}};
    for (int k = 0; k < n; ++k) power = alg.wedge(power, c1);
    return alg.integrate(power);
}

std::vector<JHShape> jh_bruteforce(long long r, long long a, long long e) {
    std::vector<JHShape> out;
    const long long b_box = std::llabs(a);
    for (long long r0 = 1; r0 <= r; ++r0)
        for (long long m = 1; m <= r; ++m)
            for (long long b0 = -b_box; b0 <= b_box; ++b0) {
                const long long g = std::gcd(r0, e);
                if (m * r0 * r0 != r * g) continue;
                if (m * r0 * b0 != a * g) continue;
                if (std::gcd(r0, std::llabs(b0)) != 1) continue;
                out.push_back({r0, b0, m, g});
            }
    return out;
}

}  // namespace hkverify::oracle
