#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixv/asymptotics.hpp"
#include "sixv/enumerate.hpp"
#include "sixv/equilibrium.hpp"
#include "sixv/errors.hpp"
#include "sixv/exact.hpp"
#include "sixv/selftest.hpp"
#include "sixv/subleading.hpp"
#include "sixv/theta.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

long env_precision(long fallback) {
    if (const char* s = std::getenv("SIXV_PRECISION_BITS")) {
        long p = std::atol(s);
        if (p >= 64) return p;
    }
    return fallback;
}

struct Options {
    double gamma = 1.0;
    double t = 0.0;
    int n = 4;
    int n_min = 4, n_max = 16;
    long precision = 0; // 0 = derive from n / environment
    int samples = 200;
    int trials = 1000;
    std::uint64_t seed = 12345;
    std::string format = "json";
    bool dump = false;
};

sixv::ModelParams params_of(const Options& o) {
    return sixv::ModelParams::create(o.gamma, o.t);
}

long precision_of(const Options& o) {
    if (o.precision >= 64) return o.precision;
    return env_precision(sixv::default_precision(o.n));
}

int cmd_params(const Options& o) {
    auto p = params_of(o);
    if (o.format == "text") {
        std::printf("gamma=%s t=%s zeta=%s omega=%s q=%s a=%s b=%s c=%s Delta=%s\n",
                    fmt17(p.gamma).c_str(), fmt17(p.t).c_str(), fmt17(p.zeta).c_str(),
                    fmt17(p.omega).c_str(), fmt17(p.q).c_str(), fmt17(p.a).c_str(),
                    fmt17(p.b).c_str(), fmt17(p.c).c_str(), fmt17(p.Delta).c_str());
        return 0;
    }
    json j{{"gamma", p.gamma}, {"t", p.t},   {"zeta", p.zeta}, {"omega", p.omega},
           {"q", p.q},         {"a", p.a},   {"b", p.b},       {"c", p.c},
           {"Delta", p.Delta}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_endpoints(const Options& o, bool with_consistency) {
    auto p = params_of(o);
    auto ep = sixv::endpoints(p);
    json j{{"alpha", ep.alpha},
           {"alpha_p", ep.alpha_p},
           {"beta_p", ep.beta_p},
           {"beta", ep.beta},
           {"centroid", (ep.alpha + ep.alpha_p + ep.beta_p + ep.beta) / 4.0}};
    if (with_consistency) {
        sixv::EquilibriumMeasure eq(p);
        auto r = eq.elliptic_consistency();
        j["consistency"] = json{{"k", r.k},
                                {"K", r.K},
                                {"K_prime", r.Kprime},
                                {"u_inf", r.u_inf},
                                {"res_ratio", r.res_ratio},
                                {"res_geom", r.res_geom},
                                {"res_uinf", r.res_uinf},
                                {"res_sn", r.res_sn}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_density(const Options& o) {
    auto p = params_of(o);
    sixv::EquilibriumMeasure eq(p);
    const auto ep = eq.support();
    std::printf("x,rho\n");
    for (int i = 0; i <= o.samples; ++i) {
        const double x = ep.alpha + (ep.beta - ep.alpha) * i / double(o.samples);
        std::printf("%s,%s\n", fmt17(x).c_str(), fmt17(eq.density(x)).c_str());
    }
    return 0;
}

int cmd_exact(const Options& o) {
    auto p = params_of(o);
    auto sol = sixv::partition_exact(p, o.n, precision_of(o));
    std::cout << sixv::to_json(sol) << "\n";
    return 0;
}

int cmd_brute(const Options& o) {
    auto p = params_of(o);
    long count = 0;
    if (o.dump) {
        sixv::enumerate_configs(o.n, [&](const sixv::VertexConfig& c) {
            std::string line;
            for (int r = 0; r < c.n; ++r) {
                if (r) line += ' ';
                for (int col = 0; col < c.n; ++col) line += char('0' + c.type(r, col));
            }
            std::printf("%s\n", line.c_str());
        });
    }
    sixv::enumerate_configs(o.n, [&](const sixv::VertexConfig&) { ++count; });
    long P = o.precision >= 64 ? o.precision : env_precision(256);
    sixv::BigReal z = sixv::brute_force_Z(p, o.n, P);
    json j{{"n", o.n}, {"count", count}, {"Z", z.to_string()}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_asym(const Options& o) {
    auto p = params_of(o);
    auto k = sixv::constants(p);
    auto m1 = sixv::m1_entries(p, o.n);
    json j{{"F", k.F},
           {"G", k.G},
           {"A", k.A},
           {"l", k.l},
           {"n", o.n},
           {"h_ratio_asym", sixv::h_ratio_asym(p, o.n)},
           {"m1",
            {{"raw12", m1.raw12},
             {"raw21", m1.raw21},
             {"clean12", m1.clean12},
             {"clean21", m1.clean21}}}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_compare(const Options& o) {
    auto p = params_of(o);
    std::vector<sixv::ExactSolution> sols;
    std::vector<double> cs;
    for (int n = o.n_min; n <= o.n_max; ++n) {
        std::cerr << "exact n=" << n << "...\n";
        sols.push_back(sixv::partition_exact(p, n, sixv::default_precision(n)));
        cs.push_back(sixv::c_n_from_exact(p, sols.back()));
    }
    const double C = cs.back();
    const auto& big = sols.back();
    std::printf("n,Z_exact_log,Z_asym_log,r_n,n2_dev\n");
    double max_n2 = 0.0, max_n1 = 0.0;
    for (size_t i = 0; i < sols.size(); ++i) {
        const int n = o.n_min + int(i);
        const double z_log = log(sols[i].Z_n).to_double();
        const double a_log = sixv::z_asym_log(p, n, C);
        max_n1 = std::max(max_n1, n * std::fabs(cs[i] / C - 1.0));
        double r_n = 0.0, n2_dev = 0.0;
        if (n < big.n) {
            const double log_exact =
                log(big.h[size_t(n)]).to_double() - 2.0 * std::lgamma(double(n) + 1.0);
            r_n = std::exp(log_exact - std::log(sixv::h_ratio_asym(p, n)));
            n2_dev = double(n) * double(n) * std::fabs(r_n - 1.0);
            max_n2 = std::max(max_n2, n2_dev);
        }
        std::printf("%d,%s,%s,%s,%s\n", n, fmt17(z_log).c_str(), fmt17(a_log).c_str(),
                    fmt17(r_n).c_str(), fmt17(n2_dev).c_str());
    }
    json j{{"C_estimate", C}, {"max_n2_dev", max_n2}, {"max_n_dev", max_n1}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_toda(const Options& o) {
    auto p = params_of(o);
    long P = o.precision >= 64 ? o.precision : env_precision(1024);
    auto res = sixv::toda_residual(p, o.n, P);
    json j{{"n", o.n}, {"precision_bits", P}, {"residual", res.to_string()}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_identities(const Options& o) {
    auto sweep = sixv::selftest::identity_sweep(o.seed, o.trials);
    const bool pass = sweep.max_residual <= 1e-12;
    json j{{"trials", sweep.trials},
           {"seed", o.seed},
           {"max_residual", sweep.max_residual},
           {"worst_identity", sweep.worst_identity},
           {"pass", pass}};
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 3;
}

int cmd_subleading(const Options& o) {
    auto p = params_of(o);
    const double f = sixv::f_value(p, o.n);
    const double z = o.n * p.omega + p.omega / 2.0;
    auto res = sixv::residue_identities(p, z);
    json j{{"gamma", p.gamma},
           {"t", p.t},
           {"n", o.n},
           {"f_value", f},
           {"dev_from_one_sixth", std::fabs(f - 1.0 / 6.0)},
           {"residues", {res.q7, res.q8, res.q9}}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_selftest(const Options& o) {
    auto results = sixv::selftest::run_acceptance(o.seed, &std::cerr);
    json arr = json::array();
    for (const auto& r : results) {
        std::printf("%s [%s] observed=%s threshold=%s (%.1f s)\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), fmt17(r.observed).c_str(),
                    fmt17(r.threshold).c_str(), r.seconds);
        arr.push_back(json{{"name", r.name},
                           {"pass", r.pass},
                           {"observed", r.observed},
                           {"threshold", r.threshold}});
    }
    std::cout << json{{"results", arr},
                      {"pass", sixv::selftest::all_pass(results)}}
                     .dump()
              << "\n";
    return sixv::selftest::all_pass(results) ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-vertex model with domain wall boundary conditions: exact "
                 "Hankel-determinant solver, brute-force enumeration, equilibrium "
                 "measure, and theta-function asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "newline-delimited key = value defaults");

    Options o;
    app.add_option("--gamma", o.gamma, "crossing parameter gamma > 0");
    app.add_option("--t", o.t, "field parameter, |t| < gamma");
    app.add_option("--n", o.n, "lattice size n");
    app.add_option("--n-min", o.n_min, "first n of a sweep");
    app.add_option("--n-max", o.n_max, "last n of a sweep");
    app.add_option("--precision", o.precision, "working precision in bits (>= 64)");
    app.add_option("--samples", o.samples, "number of density sample intervals");
    app.add_option("--trials", o.trials, "draws per identity");
    app.add_option("--seed", o.seed, "RNG seed");
    app.add_option("--format", o.format, "json|text");

    auto* c_params = app.add_subcommand("params", "derived model parameters");
    auto* c_ep = app.add_subcommand("endpoints", "equilibrium support endpoints");
    bool consistency = false;
    c_ep->add_flag("--consistency", consistency,
                   "include the elliptic-parametrization residual report");
    auto* c_den = app.add_subcommand("density", "equilibrium density as CSV");
    auto* c_exact = app.add_subcommand("exact", "exact Z_n via Hankel determinants");
    auto* c_brute = app.add_subcommand("brute", "brute-force Z_n by enumeration (n <= 6)");
    c_brute->add_flag("--dump", o.dump, "write one configuration per line");
    auto* c_asym = app.add_subcommand("asym", "asymptotic constants and M1 entries");
    auto* c_cmp = app.add_subcommand("compare", "exact vs asymptotic sweep (CSV + summary)");
    auto* c_toda = app.add_subcommand("toda", "Toda-equation residual");
    auto* c_id = app.add_subcommand("identities", "randomized theta identity suite");
    auto* c_sub = app.add_subcommand("subleading", "subleading constants and f = 1/6");
    auto* c_self = app.add_subcommand("selftest", "full acceptance suite");
    for (auto* c : {c_params, c_ep, c_den, c_exact, c_brute, c_asym, c_cmp, c_toda, c_id,
                    c_sub, c_self})
        c->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (c_params->parsed()) return cmd_params(o);
        if (c_ep->parsed()) return cmd_endpoints(o, consistency);
        if (c_den->parsed()) return cmd_density(o);
        if (c_exact->parsed()) return cmd_exact(o);
        if (c_brute->parsed()) return cmd_brute(o);
        if (c_asym->parsed()) return cmd_asym(o);
        if (c_cmp->parsed()) return cmd_compare(o);
        if (c_toda->parsed()) return cmd_toda(o);
        if (c_id->parsed()) return cmd_identities(o);
        if (c_sub->parsed()) return cmd_subleading(o);
        if (c_self->parsed()) return cmd_selftest(o);
    } catch (const sixv::precision_error& e) {
        std::cerr << "precision exhausted: " << e.what() << " (reached " << e.bits_reached
                  << " bits)\n";
        return 2;
    } catch (const sixv::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const sixv::pole_error& e) {
        std::cerr << "pole error: " << e.what() << "\n";
        return 1;
    } catch (const sixv::quadrature_error& e) {
        std::cerr << "quadrature error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
