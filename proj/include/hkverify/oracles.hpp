#pragma once

// Independent brute-force references used by the tests and the report. Nothing here calls the
// closed-form routines it is meant to check.

#include "hkverify/appendix.hpp"
#include "hkverify/kummer.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hkverify::oracle {

// 3 * (1/8) * sum over all 24 orderings of q(b_s1, b_s2) q(b_s3, b_s4).
Rational fujiki_symmetrization(const KummerTwoClass& b1, const KummerTwoClass& b2, const KummerTwoClass& b3,
                               const KummerTwoClass& b4);

// Largest negative value of q(u alpha + v beta) over |u|,|v| <= box, where q(alpha) = 0,
// q(alpha, beta) = d0 and q(beta) = q_beta. nullopt when no negative value occurs.
std::optional<Rational> max_negative_square(long long d0, long long q_beta, long long box);

// Exterior algebra on x_1..x_n, y_1..y_n; monomials are bitmasks with x_i -> bit 2i, y_i -> bit 2i+1.
class ExteriorAlgebra {
public:
    using Element = std::map<unsigned, Rational>;

    explicit ExteriorAlgebra(int n);
    Element generator_x(int i) const;
    Element generator_y(int i) const;
    Element add(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Rational& s) const;
    Element wedge(const Element& a, const Element& b) const;
    // Coefficient of x_1 y_1 ... x_n y_n, integrated with int x_i y_i = 1 per factor.
    Rational integrate(const Element& a) const;

private:
    int n_;
};

// d0 * sum_i x_i (y_1 + ... + 2 y_i + ... + y_n), raised to the n-th power and integrated.
Rational zeppola_exterior(int n, long long d0);

std::vector<JHShape> jh_bruteforce(long long r, long long a, long long e);

}  // namespace hkverify::oracle
