#pragma once

#include "hkverify/lattice.hpp"

#include <array>
#include <optional>

namespace hkverify {

// Degree-2 class mu(beta) + x*delta on the generalized Kummer fourfold of an abelian surface.
struct KummerTwoClass {
    AbelianSurfaceModel model;
    AbelianNsClass ns;
    Rational x = 0;

    static KummerTwoClass mu(const AbelianSurfaceModel& model, const Rational& p, const Rational& q);
    static KummerTwoClass delta(const AbelianSurfaceModel& model);
    static KummerTwoClass from_coords(const AbelianSurfaceModel& model, const std::array<Rational, 3>& pqx);
    // Basis order {mu(omega_bar), mu(gamma), delta}.
    static KummerTwoClass basis(const AbelianSurfaceModel& model, std::size_t i);

    std::array<Rational, 3> coords() const { return {ns.p, ns.q, x}; }

    KummerTwoClass operator+(const KummerTwoClass& o) const;
    KummerTwoClass operator-(const KummerTwoClass& o) const;
    KummerTwoClass operator*(const Rational& s) const;
    bool operator==(const KummerTwoClass&) const = default;
};

inline constexpr long long kFujikiConstant = 3;  // n + 1 for the fourfold
inline constexpr long long kC2PairFactor = 54;
inline constexpr long long kC2Square = 756;

Rational bbf(const KummerTwoClass& a, const KummerTwoClass& b);
Rational fujiki_integral(const KummerTwoClass& b1, const KummerTwoClass& b2, const KummerTwoClass& b3,
                         const KummerTwoClass& b4);
Rational c2_pair(const KummerTwoClass& a, const KummerTwoClass& b);
Rational c2_square();
Rational riemann_roch(const KummerTwoClass& c1);
Rational riemann_roch_from_square(const Rational& q);

// Degree-4 class seen through its pairings: sum_ij sym(i,j) e_i e_j + c2_coeff * c2.
class Degree4Pairing {
public:
    explicit Degree4Pairing(const AbelianSurfaceModel& model);

    static Degree4Pairing c2(const AbelianSurfaceModel& model);
    static Degree4Pairing sym_product(const KummerTwoClass& a, const KummerTwoClass& b);
    static Degree4Pairing sym_square(const KummerTwoClass& a) { return sym_product(a, a); }
    // Inverts the pairing map; every symmetric 3x3 pairing matrix comes from a unique sym part.
    static Degree4Pairing from_pairing_matrix(const AbelianSurfaceModel& model, const RationalMatrix& pairing);

    const AbelianSurfaceModel& model() const { return model_; }
    const RationalMatrix& sym() const { return sym_; }
    const Rational& c2_coeff() const { return c2_coeff_; }

    RationalMatrix pairing_matrix() const;

    Degree4Pairing operator+(const Degree4Pairing& o) const;
    Degree4Pairing operator-(const Degree4Pairing& o) const;
    Degree4Pairing operator*(const Rational& s) const;

private:
    AbelianSurfaceModel model_;
    RationalMatrix sym_;
    Rational c2_coeff_ = 0;
};

Rational integrate_degree4(const Degree4Pairing& d, const KummerTwoClass& a, const KummerTwoClass& b);
// Top-degree integral of the product of two representable degree-4 classes.
Rational integrate_product(const Degree4Pairing& d1, const Degree4Pairing& d2);

// Returns d with integral(D a a) = d q(a) on the basis and pairwise sums, or nullopt.
std::optional<Rational> modularity_coefficient(const Degree4Pairing& d);

}  // namespace hkverify
