#include "hkverify/lattice.hpp"

#include <cstdlib>
#include <numeric>

namespace hkverify {

GramLattice::GramLattice(std::vector<std::vector<long long>> gram) : gram_(std::move(gram)) {
    require(!gram_.empty(), "GramLattice: rank must be positive");
    for (const auto& row : gram_) require(row.size() == gram_.size(), "GramLattice: gram must be square");
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < i; ++j) require(gram_[i][j] == gram_[j][i], "GramLattice: gram must be symmetric");
}

bool GramLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_[i][i] % 2 != 0) return false;
    return true;
}

Rational pair(const GramLattice& lattice, const RationalVector& u, const RationalVector& v) {
    require(u.size() == lattice.rank() && v.size() == lattice.rank(), "pair: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < lattice.rank(); ++j) acc += u[i] * lattice.entry(i, j) * v[j];
    }
    return acc;
}

Integer discriminant(const GramLattice& lattice) {
    RationalMatrix m = zero_matrix(lattice.rank(), lattice.rank());
    for (std::size_t i = 0; i < lattice.rank(); ++i)
        for (std::size_t j = 0; j < lattice.rank(); ++j) m[i][j] = lattice.entry(i, j);
    return to_integer(determinant(std::move(m)));
}

AbelianSurfaceModel::AbelianSurfaceModel(long long self_omega_, long long mixed_d_)
    : self_omega(self_omega_), mixed_d(mixed_d_) {
    require(self_omega > 0 && self_omega % 2 == 0, "AbelianSurfaceModel: self_omega must be even and positive");
}

GramLattice AbelianSurfaceModel::lattice() const { return GramLattice({{self_omega, mixed_d}, {mixed_d, 0}}); }

Rational ns_pair(const AbelianSurfaceModel& model, const AbelianNsClass& a, const AbelianNsClass& b) {
    return a.p * b.p * model.self_omega + (a.p * b.q + a.q * b.p) * model.mixed_d;
}

Rational nocamere_bound(long long d0, long long q_beta) {
    require(d0 > 0, "nocamere_bound: d0 must be positive");
    require(q_beta >= 0, "nocamere_bound: q_beta must be nonnegative");
    return Rational(-2 * d0, 1 + q_beta);
}

long long kummer_divisibility(long long p, long long q, long long x) {
    require(p != 0 || q != 0 || x != 0, "kummer_divisibility: zero class");
    // mu(NS) pairs onto gcd(p,q) Z through the unimodular part; delta pairs onto 6x Z.
    return std::gcd(std::gcd(std::llabs(p), std::llabs(q)), std::llabs(6 * x));
}

namespace {

bool congruent(long long a, long long b, long long mod) { return ((a - b) % mod + mod) % mod == 0; }

}  // namespace

bool classify_moduli_case(long long e, long long i) {
    require(e > 0, "classify_moduli_case: e must be positive");
    switch (i) {
        case 1: return congruent(e, 0, 2);
        case 2: return congruent(e, -6, 8);
        case 3: return congruent(e, -6, 18);
        case 6: return congruent(e, -6, 72);
        default: throw PreconditionError("classify_moduli_case: divisibility must be 1, 2, 3 or 6");
    }
}

HypothesisResult theorem_hypothesis(long long e, long long i) {
    require(e > 0, "theorem_hypothesis: e must be positive");
    long long step = 0;
    if (i == 2) step = 16;
    if (i == 6) step = 144;
    if (step == 0 || !congruent(e, -6, step)) return {};
    return {true, (e + 6) / step};
}

}  // namespace hkverify
