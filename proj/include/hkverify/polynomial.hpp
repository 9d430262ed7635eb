#pragma once

#include "hkverify/rational.hpp"

#include <string>
#include <vector>

namespace hkverify {

// Dense univariate polynomial with exact rational coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);

    // Unique polynomial of degree < xs.size() through the given points.
    static Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

    int degree() const;  // -1 for the zero polynomial
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational operator()(const Rational& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    // Highest degree first, e.g. "288a^2 - 324a + 81".
    std::string to_string(const std::string& var = "a") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace hkverify
