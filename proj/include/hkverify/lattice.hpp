#pragma once

#include "hkverify/rational.hpp"

#include <optional>
#include <vector>

namespace hkverify {

// Symmetric integral Gram form on Z^rank.
class GramLattice {
public:
    explicit GramLattice(std::vector<std::vector<long long>> gram);

    std::size_t rank() const { return gram_.size(); }
    const std::vector<std::vector<long long>>& gram() const { return gram_; }
    long long entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    bool is_even() const;

private:
    std::vector<std::vector<long long>> gram_;
};

Rational pair(const GramLattice& lattice, const RationalVector& u, const RationalVector& v);
Integer discriminant(const GramLattice& lattice);

// Rank-2 Neron-Severi model {omega_bar, gamma} of an abelian surface.
struct AbelianSurfaceModel {
    long long self_omega = 0;  // omega_bar . omega_bar
    long long mixed_d = 0;     // omega_bar . gamma; gamma . gamma = 0

    AbelianSurfaceModel() = default;
    AbelianSurfaceModel(long long self_omega_, long long mixed_d_);

    GramLattice lattice() const;
    bool operator==(const AbelianSurfaceModel&) const = default;
};

// Class p*omega_bar + q*gamma.
struct AbelianNsClass {
    Rational p = 0;
    Rational q = 0;

    AbelianNsClass operator+(const AbelianNsClass& o) const { return {p + o.p, q + o.q}; }
    AbelianNsClass operator-(const AbelianNsClass& o) const { return {p - o.p, q - o.q}; }
    AbelianNsClass operator*(const Rational& s) const { return {p * s, q * s}; }
    bool operator==(const AbelianNsClass&) const = default;
};

Rational ns_pair(const AbelianSurfaceModel& model, const AbelianNsClass& a, const AbelianNsClass& b);

// Upper bound for negative squares in a rank-2 lattice with isotropic primitive alpha,
// disc = -d0^2 and beta chosen with q(beta) >= 0.
Rational nocamere_bound(long long d0, long long q_beta);

// Divisibility of p*mu(omega_bar) + q*mu(gamma) + x*delta, assuming {omega_bar, gamma}
// saturated in a unimodular degree-2 lattice of the abelian surface.
long long kummer_divisibility(long long p, long long q, long long x);

bool classify_moduli_case(long long e, long long i);

struct HypothesisResult {
    bool accepted = false;
    std::optional<long long> abar;
};

HypothesisResult theorem_hypothesis(long long e, long long i);

}  // namespace hkverify
