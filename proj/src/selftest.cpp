#include "sixv/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "sixv/asymptotics.hpp"
#include "sixv/enumerate.hpp"
#include "sixv/equilibrium.hpp"
#include "sixv/exact.hpp"
#include "sixv/subleading.hpp"
#include "sixv/theta.hpp"

namespace sixv::selftest {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ModelParams draw_params(std::mt19937_64& rng, double gamma_lo = 0.3, double gamma_hi = 2.5,
                        double zeta_max = 0.9) {
    std::uniform_real_distribution<double> ug(gamma_lo, gamma_hi);
    std::uniform_real_distribution<double> uz(-zeta_max, zeta_max);
    const double gamma = ug(rng);
    return ModelParams::create(gamma, uz(rng) * gamma);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double pow2(long e) { return std::ldexp(1.0, int(e)); }

// --- criterion 1: exact vs brute force -------------------------------------
CheckResult oracle_equivalence(std::mt19937_64& rng) {
    auto t0 = Clock::now();
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        ModelParams p = draw_params(rng);
        for (int n = 1; n <= 4; ++n) {
            ExactSolution sol = partition_exact(p, n, 512);
            BigReal zb = brute_force_Z(p, n, 576);
            worst = std::max(worst, BigReal::rel_diff(sol.Z_n, zb).to_double());
            if (n == 1) {
                BigReal anchor = sinh(BigReal(p.gamma, 576) * 2L);
                worst = std::max(worst, BigReal::rel_diff(sol.Z_n, anchor).to_double());
            }
        }
    }
    return {"1 oracle equivalence (exact vs brute, n<=4, 20 draws)", worst <= 1e-40, worst,
            1e-40, elapsed(t0)};
}

// --- criterion 2: dph15 norm-product vs phi-Hankel determinant --------------
CheckResult dph15_crosscheck(std::mt19937_64& rng) {
    auto t0 = Clock::now();
    ModelParams p = draw_params(rng, 0.5, 2.0, 0.7);
    const long P = 2048;
    MomentTable table = MomentTable::build(p, 30, P);
    double worst = 0.0;
    for (int n = 1; n <= 16; ++n) {
        std::vector<BigReal> h = norms(table, n);
        BigReal t_norm = tau_from_norms(h, n, P);
        BigReal t_phi = tau_hankel_phi(table, n);
        worst = std::max(worst, BigReal::rel_diff(t_phi, t_norm).to_double());
    }
    return {"2 dph15 cross-check (n<=16, P=2048)", worst <= pow2(-1024), worst, pow2(-1024),
            elapsed(t0)};
}

// --- criterion 3: Toda equation ---------------------------------------------
CheckResult toda_criterion(std::mt19937_64& rng) {
    auto t0 = Clock::now();
    const long P = 1024;
    double worst = 0.0;
    for (int draw = 0; draw < 5; ++draw) {
        ModelParams p = draw_params(rng);
        for (int n = 1; n <= 10; ++n)
            worst = std::max(worst, toda_residual(p, n, P).to_double());
    }
    return {"3 Toda residual (n<=10, P=1024, 5 draws)", worst <= pow2(-512), worst,
            pow2(-512), elapsed(t0)};
}

// --- criterion 4: theta identity suite --------------------------------------
CheckResult theta_identities(std::mt19937_64& rng) {
    auto t0 = Clock::now();
    IdentitySweep sweep = identity_sweep(rng(), 1000);
    return {"4 theta identities (" + std::to_string(sweep.trials) + " draws each, worst: " +
                sweep.worst_identity + ")",
            sweep.max_residual <= 1e-12, sweep.max_residual, 1e-12, elapsed(t0)};
}

// --- criterion 5: equilibrium measure ---------------------------------------
CheckResult equilibrium_criterion() {
    auto t0 = Clock::now();
    double worst8 = 0.0, worst6 = 0.0, worst12 = 0.0;
    for (auto [g, t] : {std::pair{1.0, 0.3}, std::pair{0.7, -0.3}}) {
        ModelParams p = ModelParams::create(g, t);
        EquilibriumMeasure eq(p);
        worst8 = std::max(worst8, std::fabs(eq.mass() - 1.0));
        worst8 = std::max(worst8,
                          std::fabs(eq.mass_from_zero_to_beta() - (1.0 + p.zeta) / 2.0));
        ConsistencyReport rep = eq.elliptic_consistency();
        worst8 = std::max({worst8, rep.res_ratio, rep.res_geom, rep.res_uinf, rep.res_sn});
        const auto [al, ap, bp, be] = eq.support();
        for (int i = 1; i <= 5; ++i) {
            const double fl = i / 6.0;
            worst6 = std::max(worst6,
                              std::fabs(eq.variational_residual(al + fl * (ap - al))));
            worst6 = std::max(worst6,
                              std::fabs(eq.variational_residual(bp + fl * (be - bp))));
        }
        // endpoint difference formulas (eq8b/eq8c)
        const Nome nome = p.nome();
        const double w2 = p.omega / 2.0;
        double tv[5];
        for (int j = 1; j <= 4; ++j) tv[j] = theta(j, w2, nome);
        const double t20 = theta(2, 0.0, nome), t30 = theta(3, 0.0, nome),
                     t40 = theta(4, 0.0, nome);
        const double pi = M_PI;
        const double diffs[6][2] = {
            {ap - al, pi * t40 * t40 * tv[2] * tv[3] / (tv[1] * tv[4])},
            {bp - ap, pi * t20 * t20 * tv[1] * tv[2] / (tv[3] * tv[4])},
            {be - bp, pi * t40 * t40 * tv[1] * tv[4] / (tv[2] * tv[3])},
            {be - al, pi * t20 * t20 * tv[3] * tv[4] / (tv[1] * tv[2])},
            {be - ap, pi * t30 * t30 * tv[1] * tv[3] / (tv[2] * tv[4])},
            {bp - al, pi * t30 * t30 * tv[2] * tv[4] / (tv[1] * tv[3])},
        };
        for (const auto& d : diffs) worst12 = std::max(worst12, std::fabs(d[0] - d[1]));
    }
    const bool pass = worst8 <= 1e-8 && worst6 <= 1e-6 && worst12 <= 1e-12;
    const double observed = std::max({worst8, worst6, worst12});
    return {"5 equilibrium measure (mass, edf3a, eq18, variational, eq8b/c)", pass,
            observed, 1e-6, elapsed(t0)};
}

// --- criterion 6: main-theorem convergence ----------------------------------
CheckResult convergence_criterion(std::ostream* progress) {
    auto t0 = Clock::now();
    bool pass = true;
    double worst_stat = 0.0;
    for (auto [g, t] : {std::pair{1.0, 0.0}, std::pair{1.0, 0.4}, std::pair{0.7, -0.3}}) {
        ModelParams p = ModelParams::create(g, t);
        const int n_lo = 4, n_hi = 28;
        std::vector<double> c;
        ExactSolution largest{0, 0, BigReal(64), {}, BigReal(64), BigReal(64), 0};
        for (int n = n_lo; n <= n_hi; ++n) {
            ExactSolution sol = partition_exact(p, n, default_precision(n));
            c.push_back(c_n_from_exact(p, sol));
            if (n == n_hi) largest = sol;
        }
        if (progress)
            (*progress) << "  c_n sweep gamma=" << g << " t=" << t
                        << " done, c_final=" << c.back() << "\n";
        // w_n = n |c_{n+1}/c_n - 1| must stay O(1) with no growth trend;
        // medians and maxima of the two halves may not grow (the sequence is
        // quasi-periodic, so per-sample comparisons are meaningless)
        std::vector<double> w;
        for (size_t i = 0; i + 1 < c.size(); ++i)
            w.push_back((n_lo + double(i)) * std::fabs(c[i + 1] / c[i] - 1.0));
        std::vector<double> first_half(w.begin(), w.begin() + w.size() / 2);
        std::vector<double> last_half(w.begin() + w.size() / 2, w.end());
        const double m_first = median(first_half), m_last = median(last_half);
        if (!(m_last <= 1.5 * m_first + 1e-12)) pass = false;
        const double x_first = *std::max_element(first_half.begin(), first_half.end());
        const double x_last = *std::max_element(last_half.begin(), last_half.end());
        if (!(x_last <= 1.5 * x_first + 1e-12)) pass = false;
        worst_stat = std::max(worst_stat, m_first > 0 ? m_last / m_first : 0.0);
        worst_stat = std::max(worst_stat, x_first > 0 ? x_last / x_first : 0.0);
        // h-ratio: n^2 |r_n - 1| bounded over [8, 28], max within 3x median
        std::vector<double> dev;
        for (int n = 8; n < largest.n; ++n) {
            const double log_exact = log(largest.h[size_t(n)]).to_double() -
                                     2.0 * std::lgamma(double(n) + 1.0);
            const double r = std::exp(log_exact - std::log(h_ratio_asym(p, n)));
            dev.push_back(double(n) * double(n) * std::fabs(r - 1.0));
        }
        const double dev_med = median(dev);
        const double dev_max = *std::max_element(dev.begin(), dev.end());
        if (!(dev_max <= 3.0 * dev_med)) pass = false;
        worst_stat = std::max(worst_stat, dev_med > 0 ? dev_max / dev_med : 0.0);
    }
    return {"6 main-theorem convergence (3 points, n=4..28)", pass, worst_stat, 3.0,
            elapsed(t0)};
}

// --- criterion 7: subleading f = 1/6 ----------------------------------------
CheckResult subleading_criterion() {
    auto t0 = Clock::now();
    const double gammas[5] = {0.4, 0.8, 1.2, 1.8, 2.4};
    const double zetas[5] = {-0.7, -0.3, 0.0, 0.4, 0.8};
    double worst = 0.0;
    for (double g : gammas)
        for (double z : zetas) {
            ModelParams p = ModelParams::create(g, z * g);
            double prev = 0.0;
            for (int n = 1; n <= 12; ++n) {
                const double f = f_value(p, n);
                worst = std::max(worst, std::fabs(f - 1.0 / 6.0));
                if (n > 1) worst = std::max(worst, std::fabs(f - prev));
                prev = f;
            }
        }
    return {"7 subleading f=1/6 (5x5 grid, n=1..12, + n-independence)", worst <= 1e-10,
            worst, 1e-10, elapsed(t0)};
}

// --- criterion 8: Appendix D equivalence ------------------------------------
CheckResult appendix_d_criterion(std::mt19937_64& rng) {
    auto t0 = Clock::now();
    std::uniform_int_distribution<int> un(1, 40);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        ModelParams p = draw_params(rng);
        M1Entries m = m1_entries(p, un(rng));
        worst = std::max(worst,
                         std::fabs(m.raw12 - m.clean12) / std::max(1.0, m.clean12));
        worst = std::max(worst,
                         std::fabs(m.raw21 - m.clean21) / std::max(1.0, m.clean21));
    }
    return {"8 Appendix D: raw (m24) vs clean (m36) M1 entries (100 draws)",
            worst <= 1e-10, worst, 1e-10, elapsed(t0)};
}

// --- criterion 9: precision ladder ------------------------------------------
CheckResult ladder_criterion() {
    auto t0 = Clock::now();
    ModelParams p = ModelParams::create(1.0, 0.3);
    bool pass = true;
    // P vs 2P agreement
    ExactSolution lo = partition_exact(p, 8, 256);
    ExactSolution hi = partition_exact(p, 8, 512);
    const double agree = BigReal::rel_diff(lo.Z_n, hi.Z_n).to_double();
    if (!(agree <= pow2(-240))) pass = false;
    // deliberately low start: must retry at least once and still land right
    ExactSolution low = partition_exact(p, 12, 64);
    if (low.retries < 1 || low.retries > 4) pass = false;
    ExactSolution ref = partition_exact(p, 12, default_precision(12));
    const double match = BigReal::rel_diff(low.Z_n, ref.Z_n).to_double();
    if (!(match <= 1e-12)) pass = false;
    return {"9 precision ladder (P/2P agreement; P0=64 n=12 retry path)", pass,
            std::max(agree, match), pow2(-240), elapsed(t0)};
}

} // namespace

IdentitySweep identity_sweep(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uz(-M_PI, M_PI);
    std::uniform_real_distribution<double> uq(0.05, 0.6);
    std::uniform_real_distribution<double> uw(0.3, M_PI - 0.3);
    // The Q-row sums are evaluated over the physical nome range (gamma <= 3
    // gives q <= e^{-pi^2/6} ~ 0.19); their terms grow like 1/theta4(0)^2 and
    // overwhelm the 1e-12 absolute budget well before q -> 1.
    std::uniform_real_distribution<double> uq_small(0.02, 0.19);

    IdentitySweep sweep{0.0, "", trials};
    for (const auto& [tag, id] : identity_table()) {
        const bool is_qsum =
            (id == ThetaIdentity::Q7 || id == ThetaIdentity::Q8 || id == ThetaIdentity::Q9);
        const bool needs_t1 = (tag[0] == '4' || tag == "Q23a" || tag == "Q23b" ||
                               tag == "Q23c" || tag == "8");
        const bool needs_t2 = (tag.rfind("evf3", 0) == 0 || tag.rfind("evf2", 0) == 0);
        for (int i = 0; i < trials; ++i) {
            double z, y, q;
            Nome nome{0.1, 0.0};
            for (int attempt = 0;; ++attempt) {
                q = is_qsum ? uq_small(rng) : uq(rng);
                nome = Nome::from_q(q);
                z = uz(rng);
                y = is_qsum ? uw(rng) : uz(rng);
                if (is_qsum) {
                    double tmin = 1e9;
                    for (int j = 1; j <= 4; ++j)
                        tmin = std::min(tmin, std::fabs(theta(j, y / 2.0, nome)));
                    if (tmin > 0.15) break;
                } else if (needs_t1) {
                    if (std::fabs(theta(1, z, nome)) > 0.3 &&
                        (tag != "8" || std::fabs(theta(1, 2.0 * z, nome)) > 0.3))
                        break;
                } else if (needs_t2) {
                    if (std::fabs(theta(2, z, nome)) > 0.3) break;
                } else {
                    break;
                }
                if (attempt > 1000) throw domain_error("identity sweep: rejection stuck");
            }
            const double res = identity_residual(id, z, y, nome);
            if (res > sweep.max_residual) {
                sweep.max_residual = res;
                sweep.worst_identity = tag;
            }
        }
    }
    return sweep;
}

std::vector<CheckResult> run_acceptance(std::uint64_t seed, std::ostream* progress) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> results;
    auto log = [&](const CheckResult& r) {
        if (progress)
            (*progress) << (r.pass ? "PASS" : "FAIL") << " [" << r.name
                        << "] observed=" << r.observed << " threshold=" << r.threshold
                        << " (" << r.seconds << " s)\n";
        results.push_back(r);
    };
    log(oracle_equivalence(rng));
    log(dph15_crosscheck(rng));
    log(toda_criterion(rng));
    log(theta_identities(rng));
    log(equilibrium_criterion());
    log(convergence_criterion(progress));
    log(subleading_criterion());
    log(appendix_d_criterion(rng));
    log(ladder_criterion());
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace sixv::selftest
