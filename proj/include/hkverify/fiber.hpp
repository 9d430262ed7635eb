#pragma once

#include "hkverify/lattice.hpp"

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace hkverify {

// Classes sigma*Sigma + gamma*Gamma on the non-reduced component; Sigma^2 = Gamma^2 = 0, Sigma.Gamma = 4.
struct FiberNsV {
    Rational sigma = 0;
    Rational gamma = 0;
};

// Classes sigma*Sigma + lambda*Lambda on the reduced component; Sigma^2 = Lambda^2 = 0, Sigma.Lambda = 1.
struct FiberNsDelta {
    Rational sigma = 0;
    Rational lambda = 0;
};

Rational square(const FiberNsV& c);
Rational square(const FiberNsDelta& c);

struct FiberDegrees {
    Integer deg_v;
    Integer deg_delta;
    bool operator==(const FiberDegrees&) const = default;
};

FiberDegrees fiber_degrees(long long m, long long d);
// Same degrees from the squares of the restricted determinant classes.
FiberDegrees fiber_degrees_gram(long long m, long long d);

// Multiple of the (1,3) polarization theta.
long long restriction_c1_smooth_fiber(long long m, long long d);

struct SubsheafProfile {
    long long r1p = 0;
    long long r1pp = 0;
    long long r2 = 0;
};

Rational subsheaf_rank(const SubsheafProfile& p, long long m, long long d);
// Weighted-degree form: ((r1' + r1'') deg V + r2 deg Delta) / (2 deg V + deg Delta).
Rational subsheaf_rank_weighted(const SubsheafProfile& p, long long m, long long d);
bool integer_rank_criterion(const SubsheafProfile& p, long long m, long long d);

Rational destabilizer_margin(long long r2, long long r1pp);

struct PotentialStabResult {
    bool ok = false;
    Rational min_margin;
    std::size_t profiles_checked = 0;
    Rational min_margin_unrestricted;  // same enumeration without r1' <= r1''
    std::size_t profiles_unrestricted = 0;
};

PotentialStabResult verify_potentialstab(long long md);

// Right-hand side of the slope identity: (alpha_1' + alpha_1'' + alpha_2)/r2 - 2 deg Sigma, deg Sigma = 12 md.
Rational alpha1_identity_check(const Rational& alpha1_f1p, const Rational& alpha1_f1pp, const Rational& alpha1_f2,
                               long long r2, long long m, long long d);
Integer deg_sigma(long long m, long long d);

// Element ((a1,a2),(b1,b2)) of (Z/N)^2 x (Z/N)^2.
using TorsionElement = std::array<int, 4>;

TorsionElement monodromy_swap(const TorsionElement& e, int modulus);
TorsionElement monodromy_shear(const TorsionElement& e, int modulus);

// All group elements generated by the two involutions, as permutations of the 2-torsion model.
std::size_t monodromy_group_order();
std::set<TorsionElement> monodromy_fixed_points();
// Cosets of the 2-torsion subgroup in the 4-torsion model, labelled by their reduction mod 2.
std::set<TorsionElement> invariant_cosets();

}  // namespace hkverify
