#include "hkverify/bundle.hpp"

namespace hkverify {

namespace {

struct Setup {
    AbelianSurfaceModel model_b;
    AbelianSurfaceModel model_a;
    AbelianNsClass omega_b{1, 0};
    KummerTwoClass ch1;
    Degree4Pairing c2;
    Degree4Pairing ch2;
};

Setup make_setup(long long a) {
    require(a >= 1, "Chern numbers need a >= 1");
    // The mixed pairing does not enter any entry; 1 keeps the model nondegenerate.
    const AbelianSurfaceModel mb(2 * a, 1);
    const AbelianSurfaceModel ma = a_model_of(mb);
    const KummerTwoClass ch1 = ch1_E(mb, {1, 0}, 0, 0);
    const Degree4Pairing c2 = Degree4Pairing::c2(ma);
    // Delta = ch1^2 - 8 ch2 and Delta = c2 for this bundle.
    const Degree4Pairing ch2 = (Degree4Pairing::sym_square(ch1) - c2) * Rational(1, 8);
    return {mb, ma, {1, 0}, ch1, c2, ch2};
}

}  // namespace

Rational ch1sq_ch2_stated(long long a) { return 576 * Rational(a) * a - 540 * a + 81; }

Rational ch1sq_ch2_blowup(long long a) {
    const Setup s = make_setup(a);
    return ch2_pair_blowup(s.model_b, s.omega_b, 0, 0, s.ch1, s.ch1);
}

Rational ch2_td2(long long a) {
    const Setup s = make_setup(a);
    return integrate_product(s.ch2, s.c2) / 12;
}

GianniTerms gianni_decomposition(long long a) {
    const Setup s = make_setup(a);
    const XTwoClass c1l = XTwoClass::nu_mu(s.model_b, s.omega_b);
    const XTwoClass d = XTwoClass::exceptional(s.model_b);
    const XTwoClass c = pullback_rho(s.ch1);
    GianniTerms g;
    g.c2_term = -c2_pair(s.ch1, s.ch1) / 12;
    // td3(X) = (1/24) c1(X) c2(X) with c1(X) = -D.
    g.td3_term = -(x_c2_pair(d, c) + x_xi_pair(d, c)) / 24;
    g.quadric_term = (x_quartic(d, d, c1l, c) + x_c2_pair(c1l, c) + x_xi_pair(c1l, c)) / 12;
    g.linear_term = -x_quartic(d, c1l, c1l, c) / 4;
    g.cubic_term = x_quartic(c1l, c1l, c1l, c) / 6;
    return g;
}

Rational chi_E(long long a) {
    require(a >= 0, "chi_E needs a >= 0");
    // Pushforward along a finite map preserves chi, and on the blow-up chi(L) equals chi(L0) on the B side.
    return riemann_roch_from_square(2 * Rational(a));
}

ChernNumberTable chern_numbers(long long a) {
    const Setup s = make_setup(a);
    ChernNumberTable t;
    t.a = a;
    t.ch1_4 = fujiki_integral(s.ch1, s.ch1, s.ch1, s.ch1);
    t.ch1sq_ch2_paper = ch1sq_ch2_stated(a);
    t.ch1sq_ch2_derived = integrate_degree4(s.ch2, s.ch1, s.ch1);
    t.ch1_ch3 = gianni_decomposition(a).sum();
    t.ch2_sq = integrate_product(s.ch2, s.ch2);
    t.chi_E = chi_E(a);
    const Rational rank_chi = 4 * riemann_roch_from_square(0);
    t.ch4 = t.chi_E - rank_chi - integrate_product(s.ch2, s.c2) / 12;
    const Degree4Pairing end_ch2 = s.ch2 * Rational(8) - Degree4Pairing::sym_square(s.ch1);
    t.chi_end = 16 * riemann_roch_from_square(0) + integrate_product(end_ch2, s.c2) / 12 +
                (8 * t.ch4 - 2 * t.ch1_ch3 + t.ch2_sq);
    t.chi_end0 = t.chi_end - riemann_roch_from_square(0);
    return t;
}

ChiEndTerms chi_end_terms(long long a) {
    const Setup s = make_setup(a);
    const ChernNumberTable t = chern_numbers(a);
    const Degree4Pairing end_ch2 = s.ch2 * Rational(8) - Degree4Pairing::sym_square(s.ch1);
    return {16 * riemann_roch_from_square(0), integrate_product(end_ch2, s.c2) / 12,
            8 * t.ch4 - 2 * t.ch1_ch3 + t.ch2_sq};
}

Rational chi_end(long long a) { return chern_numbers(a).chi_end; }

Rational chi_end0(long long a) { return chern_numbers(a).chi_end0; }

std::map<std::string, Rational> ChernNumberTable::entries() const {
    return {{"ch1-4", ch1_4},
            {"ch1sq-ch2-paper", ch1sq_ch2_paper},
            {"ch1sq-ch2-derived", ch1sq_ch2_derived},
            {"ch1-ch3", ch1_ch3},
            {"ch2-sq", ch2_sq},
            {"ch4", ch4},
            {"chi-e", chi_E},
            {"chi-end", chi_end},
            {"chi-end0", chi_end0}};
}

ChernPolynomials chern_polynomials() {
    std::vector<Rational> xs;
    std::map<std::string, std::vector<Rational>> ys;
    for (long long a = 1; a <= 5; ++a) {
        xs.emplace_back(a);
        for (const auto& [key, value] : chern_numbers(a).entries()) ys[key].push_back(value);
    }
    ChernPolynomials out;
    for (const auto& [key, values] : ys) out.entries.emplace(key, Polynomial::interpolate(xs, values));
    return out;
}

Rational a_invariant() { return AInvariantParts{}.value(); }

}  // namespace hkverify
