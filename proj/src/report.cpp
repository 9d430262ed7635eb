#include "hkverify/report.hpp"

#include "hkverify/appendix.hpp"
#include "hkverify/bundle.hpp"
#include "hkverify/fiber.hpp"
#include "hkverify/oracles.hpp"
#include "hkverify/walls.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace hkverify {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Discrepancy: return "discrepancy";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

const char* to_string(Provenance p) { return p == Provenance::Paper ? "paper" : "derived"; }

void ReportConfig::validate() const {
    require(abar_max >= 1, "abar-max must be positive");
    require(d_span >= 1, "d-max must be positive");
    require(m_max >= 1, "m-max must be positive");
    require(a_max >= 1, "a-max must be positive");
    require(md_max >= 9, "md-max must be at least 9");
}

ReportSummary Report::summary() const {
    ReportSummary s;
    for (const auto& r : records) {
        switch (r.verdict) {
            case Verdict::Pass: ++s.pass; break;
            case Verdict::Fail: ++s.fail; break;
            case Verdict::Discrepancy: ++s.discrepancy; break;
            case Verdict::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

namespace {

ClaimRecord compare(std::string id, std::string computed, std::string stated, Provenance prov) {
    const Verdict v = computed == stated ? Verdict::Pass : Verdict::Fail;
    return {std::move(id), std::move(computed), std::move(stated), v, prov};
}

ClaimRecord count_check(std::string id, std::size_t agree, std::size_t total, Provenance prov) {
    return compare(std::move(id), std::to_string(agree) + " agree", std::to_string(total) + " agree", prov);
}

template <class Range>
std::string join(const Range& items, const std::string& sep = ", ") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string set_string(const std::set<std::string>& s) { return "{" + join(s) + "}"; }

std::string element_string(const TorsionElement& e) {
    return "((" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "),(" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "))";
}

Polynomial sample_polynomial(const std::function<Rational(long long)>& f) {
    std::vector<Rational> xs, ys;
    for (long long a = 1; a <= 5; ++a) {
        xs.emplace_back(a);
        ys.push_back(f(a));
    }
    return Polynomial::interpolate(xs, ys);
}

// Reproducible small rationals for the randomized identity checks.
class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}
    Rational next() {
        std::uniform_int_distribution<int> num(-20, 20);
        std::uniform_int_distribution<int> den(1, 9);
        return Rational(num(rng_), den(rng_));
    }
    KummerTwoClass next_class(const AbelianSurfaceModel& model) {
        const Rational p = next(), q = next(), x = next();
        return KummerTwoClass::from_coords(model, {p, q, x});
    }

private:
    std::mt19937_64 rng_;
};

std::vector<long long> odd_range(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long v = lo | 1; v <= hi; v += 2) out.push_back(v);
    return out;
}

// --- lattice and Kummer cohomology ---

ClaimRecord bbf_delta_square(const ReportConfig&) {
    const AbelianSurfaceModel m(4, 5);
    return compare("bbf-delta-square", to_string(bbf(KummerTwoClass::delta(m), KummerTwoClass::delta(m))), "-6",
                   Provenance::Paper);
}

ClaimRecord bbf_h0_square(const ReportConfig&) {
    const AbelianSurfaceModel m(4, 5);
    const KummerTwoClass h0 = KummerTwoClass::mu(m, 2, 0) - KummerTwoClass::delta(m);
    return compare("bbf-h0-square", to_string(bbf(h0, h0)), "10", Provenance::Paper);
}

ClaimRecord divisibility_h0(const ReportConfig&) {
    return compare("divisibility-h0",
                   std::to_string(kummer_divisibility(2, 0, -1)) + ", " + std::to_string(kummer_divisibility(6, 0, -1)),
                   "2, 6", Provenance::Paper);
}

ClaimRecord moduli_cases(const ReportConfig&) {
    const bool first = classify_moduli_case(10, 2);
    const HypothesisResult h = theorem_hypothesis(10, 2);
    std::string computed = std::string(first ? "accepted" : "rejected") + ", abar=" +
                           (h.abar ? std::to_string(*h.abar) : std::string("none"));
    // Every theorem case is also a moduli case for the same divisibility.
    std::size_t agree = 0, total = 0;
    for (long long e = 1; e <= 2000; ++e)
        for (long long i : {2LL, 6LL})
            if (theorem_hypothesis(e, i).accepted) {
                ++total;
                agree += classify_moduli_case(e, i) ? 1 : 0;
            }
    computed += "; theorem cases inside moduli cases: " + std::to_string(agree) + "/" + std::to_string(total);
    return compare("moduli-case-examples", computed,
                   "accepted, abar=1; theorem cases inside moduli cases: " + std::to_string(total) + "/" +
                       std::to_string(total),
                   Provenance::Paper);
}

ClaimRecord nocamere(const ReportConfig&) {
    std::size_t agree = 0, total = 0;
    for (long long d0 = 1; d0 <= 6; ++d0)
        for (long long qb = 0; qb <= 8; qb += 2) {
            ++total;
            const auto worst = oracle::max_negative_square(d0, qb, 50);
            if (!worst || *worst <= nocamere_bound(d0, qb)) ++agree;
        }
    return count_check("nocamere-bound", agree, total, Provenance::Derived);
}

ClaimRecord fujiki_delta_fourth(const ReportConfig&) {
    const AbelianSurfaceModel m(4, 5);
    const KummerTwoClass d = KummerTwoClass::delta(m);
    return compare("fujiki-delta-fourth", to_string(fujiki_integral(d, d, d, d)), "324", Provenance::Paper);
}

ClaimRecord fujiki_symmetrization(const ReportConfig&) {
    RationalSource src(0x5eed0001);
    std::size_t agree = 0;
    for (int k = 0; k < 100; ++k) {
        const AbelianSurfaceModel m(2 * (1 + k % 4), 1 + 2 * (k % 7));
        const auto b1 = src.next_class(m), b2 = src.next_class(m), b3 = src.next_class(m), b4 = src.next_class(m);
        if (fujiki_integral(b1, b2, b3, b4) == oracle::fujiki_symmetrization(b1, b2, b3, b4)) ++agree;
    }
    return count_check("fujiki-symmetrization", agree, 100, Provenance::Derived);
}

ClaimRecord c2_square_claim(const ReportConfig&) {
    return compare("c2-square", to_string(c2_square()), "756", Provenance::Paper);
}

ClaimRecord c2_modularity(const ReportConfig&) {
    const auto d = modularity_coefficient(Degree4Pairing::c2(AbelianSurfaceModel(4, 5)));
    return compare("c2-modularity", d ? to_string(*d) : "not modular", "54", Provenance::Paper);
}

ClaimRecord riemann_roch_trivial(const ReportConfig&) {
    return compare("riemann-roch-trivial", to_string(riemann_roch(KummerTwoClass::mu(AbelianSurfaceModel(4, 5), 0, 0))),
                   "3", Provenance::Paper);
}

// --- blow-up calculus ---

ClaimRecord blowup_d_fourth(const ReportConfig&) {
    const XTwoClass d = XTwoClass::exceptional(AbelianSurfaceModel(2, 5));
    return compare("blowup-d-fourth", to_string(x_quartic(d, d, d, d)), "162", Provenance::Paper);
}

ClaimRecord blowup_delta_chain(const ReportConfig&) {
    const DeltaFourthChain c = delta_fourth_chain(AbelianSurfaceModel(2, 5));
    const std::string computed = to_string(c.base_term) + ", " + to_string(c.mixed_square) + ", " +
                                 to_string(c.mixed_cube) + ", " + to_string(c.cube_mixed) + ", " +
                                 to_string(c.d_fourth) + " -> " + to_string(c.total());
    // 81, (3/2) 81, 81, the vanishing term, (1/4) 2 81, summing to 4 81.
    const std::string stated = to_string(Rational(81)) + ", " + to_string(Rational(3, 2) * 81) + ", " +
                               to_string(Rational(81)) + ", 0, " + to_string(Rational(2 * 81, 4)) + " -> " +
                               to_string(Rational(4 * 81));
    return compare("blowup-delta-fourth-chain", computed, stated, Provenance::Paper);
}

ClaimRecord blowup_pullback_degree(const ReportConfig&) {
    RationalSource src(0x5eed0002);
    std::size_t agree = 0;
    for (int k = 0; k < 50; ++k) {
        const AbelianSurfaceModel ma(4 * (1 + k % 3), 1 + 2 * (k % 5));
        const auto a1 = src.next_class(ma), a2 = src.next_class(ma), a3 = src.next_class(ma), a4 = src.next_class(ma);
        if (x_quartic(pullback_rho(a1), pullback_rho(a2), pullback_rho(a3), pullback_rho(a4)) ==
            4 * fujiki_integral(a1, a2, a3, a4))
            ++agree;
    }
    return count_check("blowup-pullback-degree", agree, 50, Provenance::Paper);
}

ClaimRecord blowup_vf_delta(const ReportConfig&) {
    const AbelianSurfaceModel mb(2, 5);
    return compare("blowup-vf-delta-square", to_string(vf_pair(mb, {0, 0}, 1, {0, 0}, 1)), "-81", Provenance::Paper);
}

ClaimRecord blowup_ch1(const ReportConfig& cfg) {
    std::size_t agree = 0, total = 0;
    for (long long abar = 1; abar <= cfg.abar_max; ++abar)
        for (long long p = -2; p <= 3; ++p)
            for (long long q = -2; q <= 2; ++q)
                for (long long x = -2; x <= 2; ++x)
                    for (long long y = -2; y <= 2; ++y) {
                        const AbelianSurfaceModel mb(2 * abar, 3);
                        ++total;
                        if (ch1_E(mb, {p, q}, x, y) == ch1_E_closed(mb, {p, q}, x, y)) ++agree;
                    }
    return count_check("blowup-ch1-pushforward", agree, total, Provenance::Paper);
}

std::size_t delta_grid_agreement(const ReportConfig& cfg, const std::function<bool(const RationalMatrix&,
                                                                                    const RationalMatrix&)>& same,
                                 std::size_t& total) {
    std::size_t agree = 0;
    total = 0;
    for (long long abar = 1; abar <= cfg.abar_max; ++abar)
        for (long long d : {1LL, 3LL, 7LL})
            for (long long x = -3; x <= 3; ++x)
                for (long long y = -3; y <= 3; ++y) {
                    const AbelianSurfaceModel mb(2 * abar, d);
                    const AbelianNsClass omega{1 + abar, d % 3};
                    ++total;
                    if (same(delta_pairing_matrix_blowup(mb, omega, x, y),
                             delta_pairing_matrix_closed(a_model_of(mb), x, y)))
                        ++agree;
                }
    return agree;
}

ClaimRecord delta_mu_mu(const ReportConfig& cfg) {
    std::size_t total = 0;
    const std::size_t agree = delta_grid_agreement(
        cfg,
        [](const RationalMatrix& a, const RationalMatrix& b) {
            return a[0][0] == b[0][0] && a[0][1] == b[0][1] && a[1][1] == b[1][1];
        },
        total);
    return count_check("delta-pairing-mu-mu", agree, total, Provenance::Paper);
}

ClaimRecord delta_mu_delta(const ReportConfig& cfg) {
    std::size_t total = 0;
    const std::size_t agree = delta_grid_agreement(
        cfg,
        [](const RationalMatrix& a, const RationalMatrix&) {
            return a[0][2] == delta_pairing_mu_delta() && a[1][2] == delta_pairing_mu_delta();
        },
        total);
    return count_check("delta-pairing-mu-delta", agree, total, Provenance::Paper);
}

ClaimRecord delta_delta_delta(const ReportConfig& cfg) {
    std::size_t total = 0;
    const std::size_t agree = delta_grid_agreement(
        cfg, [](const RationalMatrix& a, const RationalMatrix& b) { return a[2][2] == b[2][2]; }, total);
    return count_check("delta-pairing-delta-delta", agree, total, Provenance::Paper);
}

ClaimRecord modular_solutions(const ReportConfig&) {
    std::set<long long> ts;
    std::set<std::string> ds;
    for (long long t = -10; t <= 10; ++t) {
        const ModularityVerdict v = is_modular_E(t, 0, AbelianSurfaceModel(2, 5), {1, 0});
        const ModularityVerdict c = is_modular_E(t, 0);
        if (v.modular != c.modular) return compare("modular-solutions", "closed form and pairing disagree", "", Provenance::Paper);
        if (v.modular) {
            ts.insert(t);
            ds.insert(to_string(*v.d));
        }
    }
    std::vector<std::string> tv;
    for (long long t : ts) tv.push_back(std::to_string(t));
    return compare("modular-solutions", "t in {" + join(tv) + "}, d " + set_string(ds), "t in {-1, 0}, d {54}",
                   Provenance::Paper);
}

ClaimRecord discriminant_equals_c2(const ReportConfig& cfg) {
    std::size_t agree = 0, total = 0;
    for (long long abar = 1; abar <= cfg.abar_max; ++abar)
        for (long long d : odd_range(3, 21))
            for (long long t : {0LL, -1LL}) {
                const AbelianSurfaceModel mb(2 * abar, d);
                const RationalMatrix delta = delta_pairing_matrix_blowup(mb, {1, 0}, t, 0);
                const RationalMatrix c2 = Degree4Pairing::c2(a_model_of(mb)).pairing_matrix();
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = i; j < 3; ++j) {
                        ++total;
                        if (delta[i][j] == c2[i][j]) ++agree;
                    }
            }
    return count_check("discriminant-equals-c2", agree, total, Provenance::Paper);
}

// --- Chern numbers ---

ClaimRecord chern_poly(const std::string& id, const std::string& key, const std::string& stated) {
    return compare(id, chern_polynomials().at(key).to_string(), stated, Provenance::Paper);
}

ClaimRecord ch1_fourth(const ReportConfig&) { return chern_poly("ch1-fourth", "ch1-4", "2304a^2 - 1728a + 324"); }
ClaimRecord ch1_ch3(const ReportConfig&) { return chern_poly("ch1-ch3", "ch1-ch3", "24a^2 - 45a + 27/2"); }
ClaimRecord ch2_square(const ReportConfig&) { return chern_poly("ch2-square", "ch2-sq", "36a^2 - 54a + 27"); }
ClaimRecord ch4_claim(const ReportConfig&) { return chern_poly("ch4", "ch4", "(3/2)a^2 - (9/2)a + 9/4"); }

ClaimRecord ch1_ch3_terms(const ReportConfig&) {
    const std::vector<std::function<Rational(const GianniTerms&)>> parts{
        [](const GianniTerms& g) { return g.c2_term; }, [](const GianniTerms& g) { return g.td3_term; },
        [](const GianniTerms& g) { return g.quadric_term; }, [](const GianniTerms& g) { return g.linear_term; },
        [](const GianniTerms& g) { return g.cubic_term; }};
    std::vector<std::string> polys;
    for (const auto& part : parts)
        polys.push_back(sample_polynomial([&](long long a) { return part(gianni_decomposition(a)); }).to_string());
    return compare("ch1-ch3-terms", join(polys, "; "), "-72a + 27; -27/2; 36a; -9a; 24a^2", Provenance::Paper);
}

ClaimRecord ch2_td2_claim(const ReportConfig&) {
    return compare("ch2-td2", sample_polynomial(ch2_td2).to_string(), "9a - 45/4", Provenance::Paper);
}

ClaimRecord ch1sq_ch2(const ReportConfig& cfg) {
    const Polynomial derived = chern_polynomials().at("ch1sq-ch2-derived");
    const Polynomial stated = chern_polynomials().at("ch1sq-ch2-paper");
    ClaimRecord r = compare("ch1sq-ch2", derived.to_string(), stated.to_string(), Provenance::Paper);
    if (r.verdict == Verdict::Pass) return r;
    // A mismatch counts as a discrepancy in the stated value only when an independent route confirms the derived one.
    bool confirmed = sample_polynomial(ch1sq_ch2_blowup) == derived;
    for (long long a = 1; a <= cfg.a_max && confirmed; ++a) confirmed = ch1sq_ch2_blowup(a) == derived(a);
    r.verdict = confirmed ? Verdict::Discrepancy : Verdict::Fail;
    return r;
}

ClaimRecord ch1sq_ch2_routes(const ReportConfig& cfg) {
    std::size_t agree = 0;
    for (long long a = 1; a <= cfg.a_max; ++a)
        if (ch1sq_ch2_blowup(a) == chern_numbers(a).ch1sq_ch2_derived) ++agree;
    return count_check("ch1sq-ch2-routes", agree, static_cast<std::size_t>(cfg.a_max), Provenance::Derived);
}

ClaimRecord chi_e_claim(const ReportConfig&) {
    const Polynomial rr = chern_polynomials().at("chi-e");
    const Polynomial hrr = Polynomial::constant(12) + sample_polynomial(ch2_td2) + chern_polynomials().at("ch4");
    const Polynomial stated_ch4({Rational(9, 4), Rational(-9, 2), Rational(3, 2)});
    const Polynomial hrr_stated = Polynomial::constant(12) + Polynomial({Rational(-45, 4), Rational(9)}) + stated_ch4;
    return compare("chi-e", rr.to_string() + "; HRR " + hrr.to_string(),
                   "(3/2)a^2 + (9/2)a + 3; HRR " + hrr_stated.to_string(), Provenance::Paper);
}

ClaimRecord chi_end_claim(const ReportConfig& cfg) {
    std::set<std::string> sweep;
    for (long long a = 1; a <= cfg.a_max; ++a) {
        const ChiEndTerms t = chi_end_terms(a);
        sweep.insert(to_string(t.rank_term) + " + " + to_string(t.c2_term) + " + " + to_string(t.top_term) + " = " +
                     to_string(t.total()));
    }
    const Polynomial p = chern_polynomials().at("chi-end");
    const Polynomial top = sample_polynomial([](long long a) { return chi_end_terms(a).top_term; });
    const std::string computed = "polynomial " + p.to_string() + "; top term " + top.to_string() + "; sweep " +
                                 set_string(sweep);
    return compare("chi-end", computed, "polynomial 3; top term 18; sweep {48 + -63 + 18 = 3}", Provenance::Paper);
}

ClaimRecord chi_traceless(const ReportConfig&) {
    return compare("chi-traceless-end", chern_polynomials().at("chi-end0").to_string(), "0", Provenance::Paper);
}

ClaimRecord a_invariant_claim(const ReportConfig&) {
    return compare("a-invariant", to_string(a_invariant()), "72", Provenance::Paper);
}

// --- walls and ampleness ---

ClaimRecord wall_numerics(const ReportConfig&) {
    const auto retained = enumerate_wall_numerics();
    std::set<std::string> qs;
    std::set<long long> divs;
    std::vector<std::string> pairs;
    for (const auto& w : retained) {
        qs.insert(to_string(w.q_w));
        divs.insert(w.div_candidates.begin(), w.div_candidates.end());
        pairs.push_back("(" + std::to_string(w.ss) + "," + std::to_string(w.sv) + ")");
    }
    std::set<std::string> dv;
    for (long long d : divs) dv.insert(std::to_string(d));
    const bool within = std::all_of(divs.begin(), divs.end(), [](long long d) { return d == 2 || d == 3 || d == 6; });
    const std::string computed = std::to_string(retained.size()) + " families " + join(pairs) + "; q " +
                                 set_string(qs) + "; div within {2, 3, 6}: " + (within ? "yes" : "no");
    return compare("wall-numerics", computed, "5 families (0,1), (0,2), (0,3), (2,4), (4,5); q {-6}; div within {2, 3, 6}: yes",
                   Provenance::Paper);
}

ClaimRecord wall_discarded(const ReportConfig&) {
    std::vector<std::string> dropped;
    for (const auto& w : generate_wall_cases())
        if (!w.retained)
            dropped.push_back("(" + std::to_string(w.ss) + "," + std::to_string(w.sv) + ") q=" + to_string(w.q_w));
    return compare("wall-discarded-case", join(dropped), "(2,3) q=2", Provenance::Derived);
}

ClaimRecord mukai_v_square(const ReportConfig&) {
    const GramLattice h2({{0, 1}, {1, 0}});
    const MukaiVector v{1, {0, 0}, -3};
    return compare("mukai-v-square", std::to_string(mukai_pair(h2, v, v)), "6", Provenance::Paper);
}

ClaimRecord ample_sweep(const ReportConfig& cfg) {
    std::set<std::string> verdicts;
    std::size_t cases = 0;
    for (long long abar = 1; abar <= cfg.abar_max; ++abar) {
        const long long thr = ample_threshold(abar);
        for (long long d : odd_range(thr + 1, thr + cfg.d_span))
            for (long long m = 1; m <= cfg.m_max; ++m) {
                const AmpleResult r = is_ample_h(abar, d, m);
                verdicts.insert(std::string(to_string(r.verdict)) + (r.witness ? " with witness" : ""));
                ++cases;
            }
    }
    return compare("ample-sweep", set_string(verdicts) + " over " + std::to_string(cases) + " cases",
                   "{Ample} over " + std::to_string(cases) + " cases", Provenance::Paper);
}

ClaimRecord ample_consistency(const ReportConfig& cfg) {
    std::size_t contradictions = 0;
    for (long long abar = 1; abar <= cfg.abar_max; ++abar) {
        const long long thr = ample_threshold(abar);
        for (long long d = 1; d <= thr + 20; ++d)
            for (long long m = 1; m <= cfg.m_max; ++m) {
                const AmpleResult r = is_ample_h(abar, d, m);
                if (r.threshold_met && r.witness) ++contradictions;
            }
    }
    return compare("ample-threshold-consistency", std::to_string(contradictions) + " contradictions", "0 contradictions",
                   Provenance::Derived);
}

// --- fiber analysis ---

ClaimRecord fiber_degrees_claim(const ReportConfig&) {
    std::size_t agree = 0, total = 0;
    for (long long m = 1; m <= 10; ++m)
        for (long long d = 1; d <= 10; ++d) {
            if (m * d <= 1) continue;
            ++total;
            if (fiber_degrees(m, d) == fiber_degrees_gram(m, d)) ++agree;
        }
    const FiberDegrees nine = fiber_degrees(1, 9);
    ClaimRecord r = count_check("fiber-degrees", agree, total, Provenance::Paper);
    r.computed += "; md=9 (" + to_string(nine.deg_v) + ", " + to_string(nine.deg_delta) + ")";
    r.stated += "; md=9 (864, 216)";
    r.verdict = r.computed == r.stated ? Verdict::Pass : Verdict::Fail;
    return r;
}

ClaimRecord fiber_restriction(const ReportConfig&) {
    return compare("fiber-restriction-c1", std::to_string(restriction_c1_smooth_fiber(1, 9)) + " theta", "18 theta",
                   Provenance::Paper);
}

ClaimRecord integer_rank(const ReportConfig& cfg) {
    std::size_t agree = 0, total = 0;
    for (long long md : odd_range(9, cfg.md_max))
        for (long long r1p = 0; r1p <= 4; ++r1p)
            for (long long r1pp = 0; r1pp <= 4; ++r1pp)
                for (long long r2 = 0; r2 <= 4; ++r2) {
                    const SubsheafProfile p{r1p, r1pp, r2};
                    ++total;
                    const bool stated = (r1p + r1pp == 2 * r2);
                    const bool by_denominator = is_integer(subsheaf_rank(p, 1, md));
                    if (integer_rank_criterion(p, 1, md) == stated && stated == by_denominator &&
                        subsheaf_rank(p, 1, md) == subsheaf_rank_weighted(p, 1, md))
                        ++agree;
                }
    return count_check("integer-rank-criterion", agree, total, Provenance::Paper);
}

ClaimRecord margin_min(const ReportConfig& cfg) {
    std::set<std::string> mins;
    for (long long md : odd_range(9, cfg.md_max)) {
        const PotentialStabResult r = verify_potentialstab(md);
        mins.insert(std::string(r.ok ? "stable" : "unstable") + ", min " + to_string(r.min_margin) + ", unrestricted min " +
                    to_string(r.min_margin_unrestricted));
    }
    return compare("destabilizer-margin", set_string(mins), "{stable, min 3, unrestricted min 3}", Provenance::Paper);
}

ClaimRecord alpha1_full(const ReportConfig&) {
    RationalSource src(0x5eed0003);
    std::size_t agree = 0;
    for (int k = 0; k < 20; ++k) {
        const long long md = 9 + 2 * k;
        const Rational a1p = src.next(), a2 = src.next();
        const Rational a1pp = a1p + 2 * Rational(deg_sigma(1, md));
        const Rational lhs = alpha1_identity_check(a1p, a1pp, a2, 4, 1, md);
        const Rational rhs = a1p / 2 + a2 / 4 - Rational(3, 2) * Rational(deg_sigma(1, md));
        if (lhs == rhs) ++agree;
    }
    return count_check("alpha1-full-sheaf", agree, 20, Provenance::Paper);
}

ClaimRecord monodromy_fixed(const ReportConfig&) {
    std::set<std::string> s;
    for (const auto& e : monodromy_fixed_points()) s.insert(element_string(e));
    return compare("monodromy-fixed-points", set_string(s) + ", group order " + std::to_string(monodromy_group_order()),
                   "{((0,0),(0,0))}, group order 6", Provenance::Paper);
}

ClaimRecord monodromy_cosets(const ReportConfig&) {
    std::set<std::string> s;
    for (const auto& e : invariant_cosets()) s.insert(element_string(e));
    return compare("monodromy-invariant-cosets", set_string(s), "{((0,0),(0,0))}", Provenance::Paper);
}

// --- appendices ---

ClaimRecord product_top_power(const ReportConfig&) {
    std::vector<std::string> computed, stated;
    bool explained = true;
    for (int n = 1; n <= 3; ++n)
        for (long long d0 = 1; d0 <= 5; ++d0) {
            const Rational top = oracle::zeppola_exterior(n, d0);
            const Integer closed = zeppola_integral(n, d0);
            computed.push_back(to_string(top));
            stated.push_back(to_string(closed));
            // Divided by n!, the top intersection is chi(xi), whose square is the kernel order used downstream.
            Rational chi = top;
            for (int k = 2; k <= n; ++k) chi /= k;
            const Integer kernel = is_simple_semihom({1, n, d0}).kernel_order;
            explained = explained && chi == Rational(closed) && chi * chi == Rational(kernel);
        }
    ClaimRecord r = compare("product-bundle-top-power", join(computed), join(stated), Provenance::Paper);
    if (r.verdict == Verdict::Fail && explained) r.verdict = Verdict::Discrepancy;
    return r;
}

ClaimRecord semihom_kernel(const ReportConfig&) {
    std::size_t agree = 0, total = 0;
    for (long long f = 1; f <= 20; ++f)
        for (long long d0 = 1; d0 <= 20; ++d0)
            for (long long n = 1; n <= 3; ++n) {
                ++total;
                const SemihomResult r = is_simple_semihom({f, n, d0});
                if (r.simple == r.kernel_coprime) ++agree;
            }
    return count_check("semihom-kernel-criterion", agree, total, Provenance::Paper);
}

ClaimRecord forced_stable_claim(const ReportConfig&) {
    std::size_t agree = 0, total = 0;
    for (long long s0 = 1; s0 <= 6; ++s0)
        for (long long e = 1; e <= 30; ++e)
            for (long long c0 = -7; c0 <= 7; ++c0) {
                if (std::gcd(s0, std::llabs(c0)) != 1) continue;
                ++total;
                const auto shapes = oracle::jh_bruteforce(s0 * s0, s0 * c0, e);
                const bool all_m1 = !shapes.empty() && std::all_of(shapes.begin(), shapes.end(),
                                                                   [](const JHShape& s) { return s.m == 1; });
                if (forced_stable(s0, c0, e) == all_m1) ++agree;
            }
    return count_check("forced-stable", agree, total, Provenance::Paper);
}

ClaimRecord jh_resubstitution(const ReportConfig&) {
    std::size_t agree = 0, total = 0;
    for (long long r = 1; r <= 16; ++r)
        for (long long a = -12; a <= 12; ++a)
            for (long long e = 1; e <= 12; ++e) {
                ++total;
                const auto fast = jh_decompositions(r, a, e);
                const auto slow = oracle::jh_bruteforce(r, a, e);
                bool ok = fast == slow;
                for (const auto& s : fast)
                    ok = ok && s.m * s.r0 * s.r0 == r * s.g && s.m * s.r0 * s.b0 == a * s.g;
                if (ok) ++agree;
            }
    return count_check("jh-resubstitution", agree, total, Provenance::Derived);
}

ClaimRecord a_side_transfer(const ReportConfig&) {
    const SatolloModel s = satollo_transfer(1, 5);
    return compare("a-side-model-transfer",
                   "(" + std::to_string(s.model.self_omega) + ", " + std::to_string(s.model.mixed_d) + "), divisors (" +
                       std::to_string(s.elementary_divisors.first) + ", " +
                       std::to_string(s.elementary_divisors.second) + ")",
                   "(4, 5), divisors (1, 2)", Provenance::Paper);
}

using ClaimFn = ClaimRecord (*)(const ReportConfig&);

const std::map<std::string, ClaimFn>& registry() {
    static const std::map<std::string, ClaimFn> r{
        {"a-invariant", a_invariant_claim},
        {"alpha1-full-sheaf", alpha1_full},
        {"ample-sweep", ample_sweep},
        {"ample-threshold-consistency", ample_consistency},
        {"bbf-delta-square", bbf_delta_square},
        {"bbf-h0-square", bbf_h0_square},
        {"blowup-ch1-pushforward", blowup_ch1},
        {"blowup-d-fourth", blowup_d_fourth},
        {"blowup-delta-fourth-chain", blowup_delta_chain},
        {"blowup-pullback-degree", blowup_pullback_degree},
        {"blowup-vf-delta-square", blowup_vf_delta},
        {"c2-modularity", c2_modularity},
        {"c2-square", c2_square_claim},
        {"ch1-ch3", ch1_ch3},
        {"ch1-ch3-terms", ch1_ch3_terms},
        {"ch1-fourth", ch1_fourth},
        {"ch1sq-ch2", ch1sq_ch2},
        {"ch1sq-ch2-routes", ch1sq_ch2_routes},
        {"ch2-square", ch2_square},
        {"ch2-td2", ch2_td2_claim},
        {"ch4", ch4_claim},
        {"chi-e", chi_e_claim},
        {"chi-end", chi_end_claim},
        {"chi-traceless-end", chi_traceless},
        {"delta-pairing-delta-delta", delta_delta_delta},
        {"delta-pairing-mu-delta", delta_mu_delta},
        {"delta-pairing-mu-mu", delta_mu_mu},
        {"destabilizer-margin", margin_min},
        {"discriminant-equals-c2", discriminant_equals_c2},
        {"divisibility-h0", divisibility_h0},
        {"fiber-degrees", fiber_degrees_claim},
        {"fiber-restriction-c1", fiber_restriction},
        {"forced-stable", forced_stable_claim},
        {"fujiki-delta-fourth", fujiki_delta_fourth},
        {"fujiki-symmetrization", fujiki_symmetrization},
        {"integer-rank-criterion", integer_rank},
        {"jh-resubstitution", jh_resubstitution},
        {"modular-solutions", modular_solutions},
        {"moduli-case-examples", moduli_cases},
        {"monodromy-fixed-points", monodromy_fixed},
        {"monodromy-invariant-cosets", monodromy_cosets},
        {"mukai-v-square", mukai_v_square},
        {"nocamere-bound", nocamere},
        {"riemann-roch-trivial", riemann_roch_trivial},
        {"a-side-model-transfer", a_side_transfer},
        {"semihom-kernel-criterion", semihom_kernel},
        {"wall-discarded-case", wall_discarded},
        {"wall-numerics", wall_numerics},
        {"product-bundle-top-power", product_top_power},
    };
    return r;
}

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    return ids;
}

Report run_report(const ReportConfig& config) {
    config.validate();
    Report report{config, {}};
    for (const auto& [id, fn] : registry()) {
        if (!config.only.empty() && id.rfind(config.only, 0) != 0) continue;
        report.records.push_back(fn(config));
    }
    std::sort(report.records.begin(), report.records.end(),
              [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; });
    return report;
}

std::string to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["version"] = "1";
    j["config"] = {{"abar_max", report.config.abar_max}, {"d_span", report.config.d_span},
                   {"m_max", report.config.m_max},       {"a_max", report.config.a_max},
                   {"md_max", report.config.md_max},     {"only", report.config.only}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records)
        j["records"].push_back({{"claim_id", r.claim_id},
                                {"computed", r.computed},
                                {"stated", r.stated},
                                {"verdict", to_string(r.verdict)},
                                {"provenance", to_string(r.provenance)}});
    const ReportSummary s = report.summary();
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"discrepancy", s.discrepancy}, {"skipped", s.skipped}};
    return j.dump(2) + "\n";
}

std::string to_markdown(const Report& report) {
    std::ostringstream out;
    out << "# hkverify report\n\n";
    out << "| claim | computed | stated | verdict | provenance |\n";
    out << "|---|---|---|---|---|\n";
    auto cell = [](std::string s) {
        std::string o;
        for (char c : s) o += (c == '|') ? std::string("\\|") : std::string(1, c);
        return o;
    };
    for (const auto& r : report.records)
        out << "| " << r.claim_id << " | " << cell(r.computed) << " | " << cell(r.stated) << " | "
            << to_string(r.verdict) << " | " << to_string(r.provenance) << " |\n";
    const ReportSummary s = report.summary();
    if (s.discrepancy > 0) {
        out << "\n## Warnings\n\n";
        for (const auto& r : report.records)
            if (r.verdict == Verdict::Discrepancy)
                out << "- " << r.claim_id << ": stated " << r.stated << ", computed " << r.computed << "\n";
    }
    out << "\n**Summary:** " << s.pass << " pass, " << s.fail << " fail, " << s.discrepancy << " discrepancy, "
        << s.skipped << " skipped\n";
    return out.str();
}

}  // namespace hkverify
