#include "sixv/asymptotics.hpp"

#include <cmath>

#include "sixv/equilibrium.hpp"

namespace sixv {

AsymptoticConstants constants(const ModelParams& params) {
    const Nome nome = params.nome();
    const double d10 = theta_deriv(1, 0.0, nome, 1);
    const double t1w = theta(1, params.omega, nome);
    AsymptoticConstants k;
    k.A = M_PI * d10 / (2.0 * t1w);
    k.G = k.A / (2.0 * params.gamma);
    k.F = 2.0 * k.G * params.a * params.b;
    k.l = -2.0 + 2.0 * std::log(k.A);
    return k;
}

double h_ratio_asym(const ModelParams& params, int n) {
    if (n < 1) throw domain_error("n must be >= 1");
    const Nome nome = params.nome();
    const AsymptoticConstants k = constants(params);
    const double logr = (2.0 * n + 1.0) * std::log(k.G) +
                        std::log(theta(4, (n + 1.0) * params.omega, nome)) -
                        std::log(theta(4, n * params.omega, nome));
    return std::exp(logr);
}

double z_asym_log(const ModelParams& params, int n, double C) {
    if (!(C > 0.0)) throw domain_error("constant C must be positive");
    if (n < 1) throw domain_error("n must be >= 1");
    const Nome nome = params.nome();
    const AsymptoticConstants k = constants(params);
    return std::log(C) + std::log(theta(4, n * params.omega, nome)) +
           double(n) * double(n) * std::log(k.F);
}

double c_n_from_exact(const ModelParams& params, const ExactSolution& sol) {
    const Nome nome = params.nome();
    const AsymptoticConstants k = constants(params);
    const long P = sol.Z_n.precision();
    // log Z_n - n^2 log F - log theta4(n omega), differenced at full precision
    BigReal logz = log(sol.Z_n);
    logz -= BigReal(std::log(k.F), P) * (long(sol.n) * sol.n);
    logz -= BigReal(std::log(theta(4, sol.n * params.omega, nome)), P);
    return std::exp(logz.to_double());
}

CEstimate estimate_C(const ModelParams& params, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("bad n range");
    CEstimate est;
    for (int n = n_lo; n <= n_hi; ++n) {
        ExactSolution sol = partition_exact(params, n, default_precision(n));
        est.c_n.emplace_back(n, c_n_from_exact(params, sol));
    }
    est.C = est.c_n.back().second;
    return est;
}

M1Entries m1_entries(const ModelParams& params, int n) {
    if (n < 1) throw domain_error("n must be >= 1");
    const Nome nome = params.nome();
    const double w = params.omega;
    const AsymptoticConstants k = constants(params);
    M1Entries out;
    out.clean12 = k.A * theta(4, (n + 1.0) * w, nome) / theta(4, n * w, nome);
    out.clean21 = k.A * theta(4, (n - 1.0) * w, nome) / theta(4, n * w, nome);

    // raw form: theta quotients at u_inf~ with the endpoint prefactor
    const Endpoints ep = endpoints(params);
    const double pref = ((ep.beta - ep.beta_p) + (ep.alpha_p - ep.alpha)) / 4.0;
    const double u_inf = M_PI * (1.0 - params.zeta) / 4.0;
    const double d = -u_inf;
    const double half_omega_n = n * w + M_PI / 2.0;
    auto t3 = [&](double z) { return theta(3, z, nome); };
    out.raw12 = std::fabs(pref * t3(-u_inf + d + half_omega_n) * t3(u_inf + d) /
                          (t3(u_inf + d + half_omega_n) * t3(-u_inf + d)));
    out.raw21 = std::fabs(pref * t3(u_inf - d + half_omega_n) * t3(-u_inf - d) /
                          (t3(-u_inf - d + half_omega_n) * t3(u_inf - d)));
    return out;
}

} // namespace sixv
