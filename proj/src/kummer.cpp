#include "hkverify/kummer.hpp"

namespace hkverify {

KummerTwoClass KummerTwoClass::mu(const AbelianSurfaceModel& model, const Rational& p, const Rational& q) {
    return {model, {p, q}, 0};
}

KummerTwoClass KummerTwoClass::delta(const AbelianSurfaceModel& model) { return {model, {0, 0}, 1}; }

KummerTwoClass KummerTwoClass::from_coords(const AbelianSurfaceModel& model, const std::array<Rational, 3>& pqx) {
    return {model, {pqx[0], pqx[1]}, pqx[2]};
}

KummerTwoClass KummerTwoClass::basis(const AbelianSurfaceModel& model, std::size_t i) {
    require(i < 3, "KummerTwoClass::basis: index out of range");
    std::array<Rational, 3> c{0, 0, 0};
    c[i] = 1;
    return from_coords(model, c);
}

KummerTwoClass KummerTwoClass::operator+(const KummerTwoClass& o) const {
    require(model == o.model, "KummerTwoClass: model mismatch");
    return {model, ns + o.ns, x + o.x};
}

KummerTwoClass KummerTwoClass::operator-(const KummerTwoClass& o) const { return *this + o * Rational(-1); }

KummerTwoClass KummerTwoClass::operator*(const Rational& s) const { return {model, ns * s, x * s}; }

Rational bbf(const KummerTwoClass& a, const KummerTwoClass& b) {
    require(a.model == b.model, "bbf: model mismatch");
    return ns_pair(a.model, a.ns, b.ns) - 6 * a.x * b.x;
}

Rational fujiki_integral(const KummerTwoClass& b1, const KummerTwoClass& b2, const KummerTwoClass& b3,
                         const KummerTwoClass& b4) {
    return kFujikiConstant * (bbf(b1, b2) * bbf(b3, b4) + bbf(b1, b3) * bbf(b2, b4) + bbf(b1, b4) * bbf(b2, b3));
}

Rational c2_pair(const KummerTwoClass& a, const KummerTwoClass& b) { return kC2PairFactor * bbf(a, b); }

Rational c2_square() { return kC2Square; }

Rational riemann_roch_from_square(const Rational& q) {
    require(is_integer(q) && numerator(q) % 2 == 0, "riemann_roch: q must be an even integer");
    const Rational h = q / 2;
    // 3 * binom(h + 2, 2) as a polynomial in h.
    return 3 * (h + 2) * (h + 1) / 2;
}

Rational riemann_roch(const KummerTwoClass& c1) { return riemann_roch_from_square(bbf(c1, c1)); }

Degree4Pairing::Degree4Pairing(const AbelianSurfaceModel& model) : model_(model), sym_(zero_matrix(3, 3)) {}

Degree4Pairing Degree4Pairing::c2(const AbelianSurfaceModel& model) {
    Degree4Pairing d(model);
    d.c2_coeff_ = 1;
    return d;
}

Degree4Pairing Degree4Pairing::sym_product(const KummerTwoClass& a, const KummerTwoClass& b) {
    require(a.model == b.model, "Degree4Pairing: model mismatch");
    Degree4Pairing d(a.model);
    const auto ca = a.coords();
    const auto cb = b.coords();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) d.sym_[i][j] = (ca[i] * cb[j] + cb[i] * ca[j]) / 2;
    return d;
}

RationalMatrix Degree4Pairing::pairing_matrix() const {
    RationalMatrix m = zero_matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = integrate_degree4(*this, KummerTwoClass::basis(model_, i), KummerTwoClass::basis(model_, j));
    return m;
}

Degree4Pairing Degree4Pairing::from_pairing_matrix(const AbelianSurfaceModel& model, const RationalMatrix& pairing) {
    require(pairing.size() == 3, "from_pairing_matrix: expected a 3x3 matrix");
    static constexpr std::array<std::array<std::size_t, 2>, 6> slots{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
    RationalMatrix system = zero_matrix(6, 6);
    RationalVector rhs(6);
    for (std::size_t u = 0; u < 6; ++u) {
        Degree4Pairing unit(model);
        unit.sym_[slots[u][0]][slots[u][1]] = 1;
        unit.sym_[slots[u][1]][slots[u][0]] = 1;
        const RationalMatrix m = unit.pairing_matrix();
        for (std::size_t r = 0; r < 6; ++r) system[r][u] = m[slots[r][0]][slots[r][1]];
    }
    for (std::size_t r = 0; r < 6; ++r) {
        require(pairing[slots[r][0]][slots[r][1]] == pairing[slots[r][1]][slots[r][0]],
                "from_pairing_matrix: matrix must be symmetric");
        rhs[r] = pairing[slots[r][0]][slots[r][1]];
    }
    const RationalVector sol = solve_linear(std::move(system), std::move(rhs));
    Degree4Pairing d(model);
    for (std::size_t u = 0; u < 6; ++u) {
        d.sym_[slots[u][0]][slots[u][1]] = sol[u];
        d.sym_[slots[u][1]][slots[u][0]] = sol[u];
    }
    return d;
}

Degree4Pairing Degree4Pairing::operator+(const Degree4Pairing& o) const {
    require(model_ == o.model_, "Degree4Pairing: model mismatch");
    Degree4Pairing d(model_);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) d.sym_[i][j] = sym_[i][j] + o.sym_[i][j];
    d.c2_coeff_ = c2_coeff_ + o.c2_coeff_;
    return d;
}

Degree4Pairing Degree4Pairing::operator-(const Degree4Pairing& o) const { return *this + o * Rational(-1); }

Degree4Pairing Degree4Pairing::operator*(const Rational& s) const {
    Degree4Pairing d(*this);
    for (auto& row : d.sym_)
        for (auto& v : row) v *= s;
    d.c2_coeff_ *= s;
    return d;
}

Rational integrate_degree4(const Degree4Pairing& d, const KummerTwoClass& a, const KummerTwoClass& b) {
    require(a.model == d.model() && b.model == d.model(), "integrate_degree4: basis mismatch");
    Rational acc = d.c2_coeff() * c2_pair(a, b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (d.sym()[i][j] == 0) continue;
            acc += d.sym()[i][j] * fujiki_integral(KummerTwoClass::basis(d.model(), i),
                                                   KummerTwoClass::basis(d.model(), j), a, b);
        }
    return acc;
}

Rational integrate_product(const Degree4Pairing& d1, const Degree4Pairing& d2) {
    require(d1.model() == d2.model(), "integrate_product: model mismatch");
    // Expand d2 into basis monomials; its c2 part pairs with d1 through c2 . d1.
    Rational acc = 0;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
            if (d2.sym()[k][l] == 0) continue;
            acc += d2.sym()[k][l] *
                   integrate_degree4(d1, KummerTwoClass::basis(d1.model(), k), KummerTwoClass::basis(d1.model(), l));
        }
    if (d2.c2_coeff() != 0) {
        Rational c2_dot_d1 = d1.c2_coeff() * c2_square();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                c2_dot_d1 += d1.sym()[i][j] *
                             c2_pair(KummerTwoClass::basis(d1.model(), i), KummerTwoClass::basis(d1.model(), j));
        acc += d2.c2_coeff() * c2_dot_d1;
    }
    return acc;
}

std::optional<Rational> modularity_coefficient(const Degree4Pairing& d) {
    std::vector<KummerTwoClass> probes;
    for (std::size_t i = 0; i < 3; ++i) probes.push_back(KummerTwoClass::basis(d.model(), i));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) probes.push_back(probes[i] + probes[j]);
    // A probe with q = 0 forces integral 0; otherwise it determines the candidate ratio.
    std::optional<Rational> ratio;
    for (const auto& a : probes) {
        const Rational q = bbf(a, a);
        const Rational val = integrate_degree4(d, a, a);
        if (q == 0) {
            if (val != 0) return std::nullopt;
            continue;
        }
        const Rational r = val / q;
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

}  // namespace hkverify
