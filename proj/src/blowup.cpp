#include "hkverify/blowup.hpp"

#include <array>
#include <stdexcept>

namespace hkverify {

XTwoClass XTwoClass::nu_mu(const AbelianSurfaceModel& model_b, const AbelianNsClass& beta) {
    return {model_b, beta, 0, 0};
}

XTwoClass XTwoClass::nu_delta(const AbelianSurfaceModel& model_b) { return {model_b, {0, 0}, 1, 0}; }

XTwoClass XTwoClass::exceptional(const AbelianSurfaceModel& model_b) { return {model_b, {0, 0}, 0, 1}; }

XTwoClass XTwoClass::operator+(const XTwoClass& o) const {
    require(model_b == o.model_b, "XTwoClass: model mismatch");
    return {model_b, ns_b + o.ns_b, s + o.s, t + o.t};
}

XTwoClass XTwoClass::operator-(const XTwoClass& o) const { return *this + o * Rational(-1); }

XTwoClass XTwoClass::operator*(const Rational& k) const { return {model_b, ns_b * k, s * k, t * k}; }

Rational vf_pair(const AbelianSurfaceModel& model_b, const AbelianNsClass& z1, const Rational& t1,
                 const AbelianNsClass& z2, const Rational& t2) {
    return VfData::pair_ns * ns_pair(model_b, z1, z2) + VfData::pair_delta * t1 * t2;
}

namespace {

Rational vf_pair_base(const KummerTwoClass& a, const KummerTwoClass& b) {
    return vf_pair(a.model, a.ns, a.x, b.ns, b.x);
}

}  // namespace

Rational x_quartic(const XTwoClass& c1, const XTwoClass& c2, const XTwoClass& c3, const XTwoClass& c4) {
    const std::array<const XTwoClass*, 4> cs{&c1, &c2, &c3, &c4};
    for (const auto* c : cs) require(c->model_b == c1.model_b, "x_quartic: model mismatch");
    const KummerTwoClass unit_delta = KummerTwoClass::delta(c1.model_b);

    Rational total = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Rational coeff = 1;
        std::vector<KummerTwoClass> rest;
        for (std::size_t i = 0; i < 4; ++i) {
            if (mask & (1u << i))
                coeff *= cs[i]->t;
            else
                rest.push_back(cs[i]->base());
        }
        if (coeff == 0) continue;
        Rational term = 0;
        switch (4 - rest.size()) {
            case 0: term = fujiki_integral(rest[0], rest[1], rest[2], rest[3]); break;
            case 1: term = 0; break;
            case 2: term = -vf_pair_base(rest[0], rest[1]); break;
            case 3: term = -vf_pair_base(rest[0], unit_delta); break;
            case 4: term = VfData::d_fourth; break;
        }
        total += coeff * term;
    }
    return total;
}

Rational x_c2_pair(const XTwoClass& a, const XTwoClass& b) {
    return c2_pair(a.base(), b.base()) - VfData::c2K2B_integral * a.t * b.t;
}

Rational x_xi_pair(const XTwoClass& a, const XTwoClass& b) {
    return vf_pair_base(a.base(), b.base()) - VfData::c2N_integral * a.t * b.t;
}

AbelianSurfaceModel b_model_of(const AbelianSurfaceModel& model_a) {
    require(model_a.self_omega % 4 == 0, "A-side model needs self_omega divisible by 4");
    return {model_a.self_omega / 2, model_a.mixed_d};
}

AbelianSurfaceModel a_model_of(const AbelianSurfaceModel& model_b) {
    return {2 * model_b.self_omega, model_b.mixed_d};
}

XTwoClass pullback_rho(const KummerTwoClass& c) {
    const AbelianSurfaceModel mb = b_model_of(c.model);
    // f^* omega_bar_A = 2 omega_bar_B, f^* gamma_A = gamma_B; delta_A pulls back to nu^*delta_B + D.
    return {mb, {2 * c.ns.p, c.ns.q}, c.x, c.x};
}

KummerTwoClass pushforward_rho(const XTwoClass& c) {
    const AbelianSurfaceModel ma = a_model_of(c.model_b);
    // f_* omega_bar_B = omega_bar_A, f_* gamma_B = 2 gamma_A; both nu^*delta_B and D go to 2 delta_A.
    return {ma, {2 * c.ns_b.p, 4 * c.ns_b.q}, 2 * c.s + 2 * c.t};
}

namespace {

XTwoClass line_class(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x, long long y) {
    return {model_b, omega_b, Rational(x), Rational(y)};
}

}  // namespace

KummerTwoClass ch1_E(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x, long long y) {
    const XTwoClass c1l = line_class(model_b, omega_b, x, y);
    return pushforward_rho(c1l) - pushforward_rho(XTwoClass::exceptional(model_b)) * Rational(1, 2);
}

KummerTwoClass ch1_E_closed(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x,
                            long long y) {
    const AbelianSurfaceModel ma = a_model_of(model_b);
    const AbelianNsClass f_push{omega_b.p, 2 * omega_b.q};
    return KummerTwoClass::mu(ma, 2 * f_push.p, 2 * f_push.q) + KummerTwoClass::delta(ma) * Rational(2 * x + 2 * y - 1);
}

Rational ch2_pair_blowup(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b, long long x, long long y,
                         const KummerTwoClass& a, const KummerTwoClass& b) {
    const XTwoClass l = line_class(model_b, omega_b, x, y);
    const XTwoClass d = XTwoClass::exceptional(model_b);
    const XTwoClass ap = pullback_rho(a);
    const XTwoClass bp = pullback_rho(b);
    require(ap.model_b == model_b, "ch2_pair_blowup: model mismatch");
    // Degree-2 part of ch(L) td(X) with c1(X) = -D, pushed down, minus rank times td2 of the target.
    Rational val = x_quartic(l, l, ap, bp) / 2 - x_quartic(l, d, ap, bp) / 2;
    val += (x_quartic(d, d, ap, bp) + x_c2_pair(ap, bp) + x_xi_pair(ap, bp)) / 12;
    val -= Rational(4, 12) * c2_pair(a, b);
    return val;
}

RationalMatrix delta_pairing_matrix_blowup(const AbelianSurfaceModel& model_b, const AbelianNsClass& omega_b,
                                           long long x, long long y) {
    const AbelianSurfaceModel ma = a_model_of(model_b);
    const KummerTwoClass c1 = ch1_E(model_b, omega_b, x, y);
    RationalMatrix m = zero_matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const KummerTwoClass ei = KummerTwoClass::basis(ma, i);
            const KummerTwoClass ej = KummerTwoClass::basis(ma, j);
            m[i][j] = fujiki_integral(c1, c1, ei, ej) - 8 * ch2_pair_blowup(model_b, omega_b, x, y, ei, ej);
        }
    return m;
}

namespace {

Rational mu_mu_factor(long long t) { return 18 * (4 * Rational(t) * t + 4 * t + 3); }
Rational delta_delta_factor(long long t) { return 54 * (Rational(t) * t + t + 1); }

}  // namespace

RationalMatrix delta_pairing_matrix_closed(const AbelianSurfaceModel& model_a, long long x, long long y) {
    const long long t = x - y;
    RationalMatrix m = zero_matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const KummerTwoClass ei = KummerTwoClass::basis(model_a, i);
            const KummerTwoClass ej = KummerTwoClass::basis(model_a, j);
            // The mixed mu/delta pairing vanishes, so only the two diagonal blocks contribute.
            m[i][j] = mu_mu_factor(t) * ns_pair(model_a, ei.ns, ej.ns) + delta_delta_factor(t) * (-6) * ei.x * ej.x;
        }
    return m;
}

Rational delta_pairing_mu_mu(long long x, long long y, const AbelianSurfaceModel& model_a, const AbelianNsClass& gamma) {
    return mu_mu_factor(x - y) * ns_pair(model_a, gamma, gamma);
}

Rational delta_pairing_mu_delta() { return 0; }

Rational delta_pairing_delta_delta(long long x, long long y) { return delta_delta_factor(x - y) * (-6); }

ModularityVerdict is_modular_E(long long x, long long y) {
    const long long t = x - y;
    if (mu_mu_factor(t) != delta_delta_factor(t)) return {};
    return {true, mu_mu_factor(t)};
}

ModularityVerdict is_modular_E(long long x, long long y, const AbelianSurfaceModel& model_b,
                               const AbelianNsClass& omega_b) {
    const AbelianSurfaceModel ma = a_model_of(model_b);
    const Degree4Pairing disc =
        Degree4Pairing::from_pairing_matrix(ma, delta_pairing_matrix_blowup(model_b, omega_b, x, y));
    const std::optional<Rational> d = modularity_coefficient(disc);
    if (!d) return {};
    if (disc.pairing_matrix() != Degree4Pairing::c2(ma).pairing_matrix())
        throw std::logic_error("modular discriminant differs from c2 on the pairing basis");
    return {true, d};
}

DeltaFourthChain delta_fourth_chain(const AbelianSurfaceModel& model_b) {
    const XTwoClass nd = XTwoClass::nu_delta(model_b);
    const XTwoClass d = XTwoClass::exceptional(model_b);
    DeltaFourthChain chain;
    // Binomial expansion of (nu^*delta_B + D)^4, each term divided by 4.
    chain.base_term = x_quartic(nd, nd, nd, nd) / 4;
    chain.cube_mixed = x_quartic(nd, nd, nd, d);
    chain.mixed_square = Rational(6, 4) * x_quartic(nd, nd, d, d);
    chain.mixed_cube = x_quartic(nd, d, d, d);
    chain.d_fourth = x_quartic(d, d, d, d) / 4;
    return chain;
}

}  // namespace hkverify
