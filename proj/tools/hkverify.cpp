#include "hkverify/appendix.hpp"
#include "hkverify/blowup.hpp"
#include "hkverify/bundle.hpp"
#include "hkverify/fiber.hpp"
#include "hkverify/kummer.hpp"
#include "hkverify/report.hpp"
#include "hkverify/walls.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hkverify;

namespace {

// Numeric flags take integers or "p/q"; integer-valued parameters must reduce to an integer.
long long as_integer(const std::string& text, const char* flag) {
    const Rational r = parse_rational(text);
    if (!is_integer(r)) throw PreconditionError(std::string(flag) + " must be an integer");
    return to_int64(r);
}

KummerTwoClass parse_class(const AbelianSurfaceModel& model, const std::string& text) {
    std::array<Rational, 3> c;
    std::istringstream in(text);
    std::string part;
    std::size_t k = 0;
    while (std::getline(in, part, ',')) {
        require(k < 3, "class must have the form p,q,x");
        c[k++] = parse_rational(part);
    }
    require(k == 3, "class must have the form p,q,x");
    return KummerTwoClass::from_coords(model, c);
}

std::string element_string(const TorsionElement& e) {
    return "((" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "),(" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "))";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification of Kummer-type fourfold numerics"};
    app.require_subcommand(1);

    // report
    std::string format = "json", only, abar_max = "3", d_span = "200", a_max = "50";
    auto* report = app.add_subcommand("report", "Run every check and print the claim report");
    report->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    report->add_option("--only", only, "Claim-id prefix filter");
    report->add_option("--abar-max", abar_max, "abar in 1..N");
    report->add_option("--d-max", d_span, "odd d from the ampleness threshold up to threshold + N");
    report->add_option("--a-max", a_max, "a in 1..N");

    // fujiki
    std::string self_omega = "4", mixed_d = "5";
    std::vector<std::string> classes;
    auto* fujiki = app.add_subcommand("fujiki", "Top intersection of four degree-2 classes p,q,x");
    fujiki->add_option("--self-omega", self_omega, "omega_bar squared (even, positive)");
    fujiki->add_option("--d", mixed_d, "omega_bar . gamma");
    fujiki->add_option("--class", classes, "Class p,q,x; give one to four times (the last repeats)")->required();

    // rr
    std::string rr_class;
    auto* rr = app.add_subcommand("rr", "Euler characteristic of a line bundle with c1 = p,q,x");
    rr->add_option("--self-omega", self_omega, "omega_bar squared (even, positive)");
    rr->add_option("--d", mixed_d, "omega_bar . gamma");
    rr->add_option("--class", rr_class, "Class p,q,x")->required();

    // walls
    bool show_discarded = false;
    auto* walls = app.add_subcommand("walls", "Numeric wall-divisor families");
    walls->add_flag("--show-discarded", show_discarded, "Also list generated cases with non-negative square");

    // ample
    std::string abar = "1", amp_d = "31", amp_m = "1";
    auto* ample = app.add_subcommand("ample", "Ampleness of 2m mu(omega_bar) - delta");
    ample->add_option("--abar", abar)->required();
    ample->add_option("--d", amp_d)->required();
    ample->add_option("--m", amp_m)->required();

    // modularity
    std::string mod_x = "0", mod_y = "0";
    auto* modularity = app.add_subcommand("modularity", "Modularity of the pushforward bundle for twists x, y");
    modularity->add_option("--x", mod_x);
    modularity->add_option("--y", mod_y);

    // chern
    std::string chern_a = "1", entry;
    auto* chern = app.add_subcommand("chern", "Chern numbers of the pushforward bundle");
    chern->add_option("--a", chern_a)->required();
    chern->add_option("--entry", entry, "Single entry to print");

    // fiber
    std::string fib_m = "1", fib_d = "9";
    auto* fiber = app.add_subcommand("fiber", "Degrees and stability margin on the singular fiber");
    fiber->add_option("--m", fib_m);
    fiber->add_option("--d", fib_d);

    // monodromy
    auto* monodromy = app.add_subcommand("monodromy", "Monodromy action on torsion points");

    // semihom
    std::string deg_f = "4", sh_n = "2", d0 = "3";
    auto* semihom = app.add_subcommand("semihom", "Simplicity criterion for semi-homogeneous bundles");
    semihom->add_option("--deg-f", deg_f);
    semihom->add_option("--n", sh_n);
    semihom->add_option("--d0", d0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*report) {
            ReportConfig cfg;
            cfg.abar_max = as_integer(abar_max, "--abar-max");
            cfg.d_span = as_integer(d_span, "--d-max");
            cfg.a_max = as_integer(a_max, "--a-max");
            cfg.only = only;
            const Report r = run_report(cfg);
            std::cout << (format == "md" ? to_markdown(r) : to_json(r));
            return r.summary().fail > 0 ? 1 : 0;
        }
        const AbelianSurfaceModel model(as_integer(self_omega, "--self-omega"), as_integer(mixed_d, "--d"));
        if (*fujiki) {
            require(classes.size() <= 4, "at most four classes");
            std::vector<KummerTwoClass> b;
            for (const auto& c : classes) b.push_back(parse_class(model, c));
            while (b.size() < 4) b.push_back(b.back());
            std::cout << to_string(fujiki_integral(b[0], b[1], b[2], b[3])) << "\n";
        } else if (*rr) {
            std::cout << to_string(riemann_roch(parse_class(model, rr_class))) << "\n";
        } else if (*walls) {
            std::cout << "ss  sv  n  q   div\n";
            for (const auto& w : generate_wall_cases()) {
                if (!w.retained && !show_discarded) continue;
                std::string divs;
                for (long long v : w.div_candidates) divs += (divs.empty() ? "" : ",") + std::to_string(v);
                std::cout << w.ss << "   " << w.sv << "   " << w.n << "  " << to_string(w.q_w) << "  {" << divs << "}"
                          << (w.retained ? "" : "  discarded") << "\n";
            }
        } else if (*ample) {
            const AmpleResult r =
                is_ample_h(as_integer(abar, "--abar"), as_integer(amp_d, "--d"), as_integer(amp_m, "--m"));
            std::cout << to_string(r.verdict);
            if (r.witness)
                std::cout << " witness p=" << r.witness->p << " q=" << r.witness->q << " x=" << r.witness->x
                          << " q(w)=" << to_string(r.witness->q_w)
                          << (r.witness->separating ? " separating" : " containing");
            std::cout << "\n";
        } else if (*modularity) {
            const ModularityVerdict v = is_modular_E(as_integer(mod_x, "--x"), as_integer(mod_y, "--y"));
            std::cout << (v.modular ? "modular d=" + to_string(*v.d) : std::string("not modular")) << "\n";
        } else if (*chern) {
            const auto entries = chern_numbers(as_integer(chern_a, "--a")).entries();
            if (!entry.empty()) {
                const auto it = entries.find(entry);
                require(it != entries.end(), "unknown entry");
                std::cout << to_string(it->second) << "\n";
            } else {
                for (const auto& [k, v] : entries) std::cout << k << " " << to_string(v) << "\n";
            }
        } else if (*fiber) {
            const long long m = as_integer(fib_m, "--m"), d = as_integer(fib_d, "--d");
            const FiberDegrees deg = fiber_degrees(m, d);
            std::cout << "deg V " << to_string(deg.deg_v) << "\ndeg Delta " << to_string(deg.deg_delta)
                      << "\nc1 on smooth fiber " << restriction_c1_smooth_fiber(m, d) << " theta\n";
            if ((m * d) % 2 != 0 && m * d > 8) {
                const PotentialStabResult s = verify_potentialstab(m * d);
                std::cout << "stable " << (s.ok ? "yes" : "no") << " min margin " << to_string(s.min_margin) << " over "
                          << s.profiles_checked << " profiles\n";
            }
        } else if (*monodromy) {
            std::cout << "group order " << monodromy_group_order() << "\nfixed points";
            for (const auto& e : monodromy_fixed_points()) std::cout << " " << element_string(e);
            std::cout << "\ninvariant cosets";
            for (const auto& e : invariant_cosets()) std::cout << " " << element_string(e);
            std::cout << "\n";
        } else if (*semihom) {
            const SemihomResult r = is_simple_semihom(
                {as_integer(deg_f, "--deg-f"), as_integer(sh_n, "--n"), as_integer(d0, "--d0")});
            std::cout << (r.simple ? "simple" : "not simple") << " rank " << to_string(r.rank) << " kernel order "
                      << to_string(r.kernel_order) << "\n";
        }
        return 0;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
