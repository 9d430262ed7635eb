#include "hkverify/fiber.hpp"

#include <map>
#include <queue>

namespace hkverify {

Rational square(const FiberNsV& c) {
    const GramLattice g({{0, 4}, {4, 0}});
    return pair(g, {c.sigma, c.gamma}, {c.sigma, c.gamma});
}

Rational square(const FiberNsDelta& c) {
    const GramLattice g({{0, 1}, {1, 0}});
    return pair(g, {c.sigma, c.lambda}, {c.sigma, c.lambda});
}

namespace {

long long checked_md(long long m, long long d) {
    require(m > 0 && d > 0, "fiber: m and d must be positive");
    const long long md = m * d;
    require(md > 1, "fiber: md must exceed 1");
    return md;
}

}  // namespace

FiberDegrees fiber_degrees(long long m, long long d) {
    const Integer md = checked_md(m, d);
    return {12 * md * (md - 1), 24 * md};
}

FiberDegrees fiber_degrees_gram(long long m, long long d) {
    const Rational md = checked_md(m, d);
    const FiberNsV on_v{(md - 1) / 2, 3 * md};
    const FiberNsDelta on_delta{1, 12 * md};
    return {to_integer(square(on_v)), to_integer(square(on_delta))};
}

long long restriction_c1_smooth_fiber(long long m, long long d) {
    require(m > 0 && d > 0, "fiber: m and d must be positive");
    return 2 * m * d;
}

Rational subsheaf_rank(const SubsheafProfile& p, long long m, long long d) {
    const Rational md = checked_md(m, d);
    const Rational s = p.r1p + p.r1pp;
    return s / 2 - (s - 2 * p.r2) / (2 * md);
}

Rational subsheaf_rank_weighted(const SubsheafProfile& p, long long m, long long d) {
    const FiberDegrees deg = fiber_degrees(m, d);
    const Rational dv(deg.deg_v);
    const Rational dd(deg.deg_delta);
    return (Rational(p.r1p + p.r1pp) * dv + Rational(p.r2) * dd) / (2 * dv + dd);
}

bool integer_rank_criterion(const SubsheafProfile& p, long long m, long long d) {
    require(checked_md(m, d) > 8, "integer_rank_criterion: needs md > 8");
    return is_integer(subsheaf_rank(p, m, d));
}

Rational destabilizer_margin(long long r2, long long r1pp) {
    require(r2 >= 1 && r2 <= 3, "destabilizer_margin: r2 must be 1, 2 or 3");
    return 33 - 6 * r2 - Rational(12 + 6 * r1pp, r2);
}

PotentialStabResult verify_potentialstab(long long md) {
    require(md > 8 && md % 2 == 1, "verify_potentialstab: md must be odd and greater than 8");
    PotentialStabResult res;
    res.ok = true;
    bool first = true;
    bool first_unrestricted = true;
    for (long long r2 = 1; r2 <= 3; ++r2) {
        for (long long r1pp = 0; r1pp <= 4; ++r1pp) {
            const long long r1p = 2 * r2 - r1pp;
            if (r1p < 0 || r1p > 4) continue;
            // The margin multiplies md in the slope difference, so its sign decides the inequality.
            const Rational margin = destabilizer_margin(r2, r1pp);
            if (first_unrestricted || margin < res.min_margin_unrestricted) res.min_margin_unrestricted = margin;
            first_unrestricted = false;
            ++res.profiles_unrestricted;
            if (r1p > r1pp) continue;
            if (first || margin < res.min_margin) res.min_margin = margin;
            first = false;
            ++res.profiles_checked;
            if (margin * md <= 0) res.ok = false;
        }
    }
    return res;
}

Integer deg_sigma(long long m, long long d) { return 12 * Integer(checked_md(m, d)); }

Rational alpha1_identity_check(const Rational& alpha1_f1p, const Rational& alpha1_f1pp, const Rational& alpha1_f2,
                               long long r2, long long m, long long d) {
    require(r2 > 0, "alpha1_identity_check: r2 must be positive");
    return (alpha1_f1p + alpha1_f1pp + alpha1_f2) / r2 - 2 * Rational(deg_sigma(m, d));
}

namespace {

int mod(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

TorsionElement monodromy_swap(const TorsionElement& e, int modulus) {
    return {mod(e[2], modulus), mod(e[3], modulus), mod(e[0], modulus), mod(e[1], modulus)};
}

TorsionElement monodromy_shear(const TorsionElement& e, int modulus) {
    return {mod(e[0], modulus), mod(e[1], modulus), mod(-e[0] - e[2], modulus), mod(-e[1] - e[3], modulus)};
}

namespace {

std::vector<TorsionElement> all_elements(int modulus) {
    std::vector<TorsionElement> out;
    for (int a1 = 0; a1 < modulus; ++a1)
        for (int a2 = 0; a2 < modulus; ++a2)
            for (int b1 = 0; b1 < modulus; ++b1)
                for (int b2 = 0; b2 < modulus; ++b2) out.push_back({a1, a2, b1, b2});
    return out;
}

using Permutation = std::map<TorsionElement, TorsionElement>;

Permutation as_permutation(TorsionElement (*g)(const TorsionElement&, int), int modulus) {
    Permutation p;
    for (const auto& e : all_elements(modulus)) p[e] = g(e, modulus);
    return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    Permutation out;
    for (const auto& [k, v] : g) out[k] = f.at(v);
    return out;
}

std::set<Permutation> generated_group(int modulus) {
    const std::vector<Permutation> gens{as_permutation(monodromy_swap, modulus),
                                        as_permutation(monodromy_shear, modulus)};
    Permutation identity;
    for (const auto& e : all_elements(modulus)) identity[e] = e;
    std::set<Permutation> group{identity};
    std::queue<Permutation> frontier;
    frontier.push(identity);
    while (!frontier.empty()) {
        const Permutation cur = frontier.front();
        frontier.pop();
        for (const auto& g : gens) {
            Permutation next = compose(g, cur);
            if (group.insert(next).second) frontier.push(std::move(next));
        }
    }
    return group;
}

}  // namespace

std::size_t monodromy_group_order() { return generated_group(2).size(); }

std::set<TorsionElement> monodromy_fixed_points() {
    const std::set<Permutation> group = generated_group(2);
    std::set<TorsionElement> fixed;
    for (const auto& e : all_elements(2)) {
        bool invariant = true;
        for (const auto& g : group) invariant = invariant && g.at(e) == e;
        if (invariant) fixed.insert(e);
    }
    return fixed;
}

std::set<TorsionElement> invariant_cosets() {
    const std::set<Permutation> group = generated_group(4);
    auto reduce = [](const TorsionElement& e) { return TorsionElement{e[0] % 2, e[1] % 2, e[2] % 2, e[3] % 2}; };
    std::set<TorsionElement> out;
    for (const auto& label : all_elements(2)) {
        // Every representative of the coset must land back in the coset.
        bool invariant = true;
        for (const auto& e : all_elements(4)) {
            if (reduce(e) != label) continue;
            for (const auto& g : group) invariant = invariant && reduce(g.at(e)) == label;
        }
        if (invariant) out.insert(label);
    }
    return out;
}

}  // namespace hkverify
