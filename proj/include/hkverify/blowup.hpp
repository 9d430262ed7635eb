#pragma once

#include "hkverify/kummer.hpp"

#include <optional>

namespace hkverify {

// Degree-2 class nu^* mu_B(beta) + s nu^* delta_B + t D on the blow-up X of the B-side fourfold
// along the fixed surface, with D the exceptional divisor.
struct XTwoClass {
    AbelianSurfaceModel model_b;
    AbelianNsClass ns_b;
    Rational s = 0;
    Rational t = 0;

    static XTwoClass nu_mu(const AbelianSurfaceModel& model_b, const AbelianNsClass& beta);
    static XTwoClass nu_delta(const AbelianSurfaceModel& model_b);
    static XTwoClass exceptional(const AbelianSurfaceModel& model_b);

    // The part pulled back from the B-side fourfold, dropping t.
    KummerTwoClass base() const { return {model_b, ns_b, s}; }

    XTwoClass operator+(const XTwoClass& o) const;
    XTwoClass operator-(const XTwoClass& o) const;
    XTwoClass operator*(const Rational& s) const;
    bool operator==(const XTwoClass&) const = default;
};

// Integrals over the blown-up surface and its normal data.
struct VfData {
    static constexpr long long pair_ns = 18;      // coefficient of (zeta, zeta')_B
    static constexpr long long pair_delta = -81;  // coefficient of t t'
    static constexpr long long c2N_integral = 81;
    static constexpr long long c2K2B_integral = 243;
    static constexpr long long d_fourth = 162;  // c2N_integral minus the square of c1N
};

// (zeta, t) pairs on the fixed surface: restriction of mu_B(zeta) + t delta_B.
Rational vf_pair(const AbelianSurfaceModel& model_b, const AbelianNsClass& z1, const Rational& t1,
                 const AbelianNsClass& z2, const Rational& t2);

Rational x_quartic(const XTwoClass& c1, const XTwoClass& c2, const XTwoClass& c3, const XTwoClass& c4);

// Integral over X of nu^* c2(B-side) * c * c'.
Rational x_c2_pair(const XTwoClass& a, const XTwoClass& b);
// Integral over X of the pushforward from D of c1 of the tautological quotient, times c * c'.
Rational x_xi_pair(const XTwoClass& a, const XTwoClass& b);

AbelianSurfaceModel b_model_of(const AbelianSurfaceModel& model_a);
AbelianSurfaceModel a_model_of(const AbelianSurfaceModel& model_b);

XTwoClass pullback_rho(const KummerTwoClass& c);
KummerTwoClass pushforward_rho(const XTwoClass& c);

// First Chern class of the pushforward bundle for L with c1(L) = nu^*(mu_B(omega) + x delta_B) + y D.
KummerTwoClass ch1_E(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x, long long y);
KummerTwoClass ch1_E_closed(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x,
                            long long y);

// Integral over the A-side fourfold of ch2(E) * a * b computed on X by GRR reduction.
Rational ch2_pair_blowup(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x, long long y,
                         const KummerTwoClass& a, const KummerTwoClass& b);

// Discriminant pairing matrix on the A-side basis via ch1^2 - 8 ch2 through the reduction rules.
RationalMatrix delta_pairing_matrix_blowup(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b,
                                           long long x, long long y);
// Same matrix from the closed forms below.
RationalMatrix delta_pairing_matrix_closed(const AbelianSurfaceModel& model_a, long long x, long long y);

Rational delta_pairing_mu_mu(long long x, long long y, const AbelianSurfaceModel& model_a, const AbelianNsClass& gamma);
Rational delta_pairing_mu_delta();
Rational delta_pairing_delta_delta(long long x, long long y);

struct ModularityVerdict {
    bool modular = false;
    std::optional<Rational> d;
};

// Closed-form decision on t = x - y.
ModularityVerdict is_modular_E(long long x, long long y);
// Decision from the reduction-rule pairing on a given model; when modular, also checks Delta = c2
// on the full pairing basis and throws std::logic_error if that fails.
ModularityVerdict is_modular_E(long long x, long long y, const AbelianSurfaceModel& model_b,
                               const AbelianNsClass& omega_b);

// Term-by-term expansion of (1/4) int_X (nu^* delta_B + D)^4.
struct DeltaFourthChain {
    Rational base_term;     // (1/4) int delta_B^4
    Rational mixed_square;  // (3/2) int nu^*delta_B^2 D^2
    Rational mixed_cube;    // int nu^*delta_B D^3
    Rational cube_mixed;    // int nu^*delta_B^3 D, which vanishes
    Rational d_fourth;      // (1/4) int D^4
    Rational total() const { return base_term + mixed_square + mixed_cube + cube_mixed + d_fourth; }
};

DeltaFourthChain delta_fourth_chain(const AbelianSurfaceModel& model_b);

}  // namespace hkverify
