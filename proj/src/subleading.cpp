#include "sixv/subleading.hpp"

#include <cmath>

#include "sixv/asymptotics.hpp"
#include "sixv/equilibrium.hpp"

namespace sixv {

namespace {

// Per-row structure of the correction term.  Row j pairs the theta index
// carrying the z dependence with a fixed theta at omega/2 and one of the two
// gaps beta'-alpha, beta-alpha':
//   row 0 (alpha):  theta4(z), theta3(w/2), beta'-alpha
//   row 1 (alpha'): theta1(z), theta2(w/2), beta-alpha'
//   row 2 (beta'):  theta2(z), theta1(w/2), beta'-alpha
//   row 3 (beta):   theta3(z), theta4(w/2), beta-alpha'
constexpr int kZTheta[4] = {4, 1, 2, 3};
constexpr int kWTheta[4] = {3, 2, 1, 4};
constexpr double kXiSign[4] = {1.0, -1.0, 1.0, -1.0};
constexpr double kEtaSign[4] = {1.0, -1.0, -1.0, 1.0};

struct RowContext {
    ModelParams params;
    Nome nome;
    Endpoints ep;
    double r[4], s[4];   // log-derivatives of theta_{kWTheta[j]} at omega/2
    double gap[4];
    double C[4];
    double P[4];         // prefactor of the Q_j* row

    explicit RowContext(const ModelParams& p) : params(p), nome(p.nome()), ep(endpoints(p)) {
        const double w2 = p.omega / 2.0;
        const auto [al, ap, bp, be] = ep;
        const double gap1 = bp - al, gap2 = be - ap;
        gap[kAlpha] = gap1;
        gap[kAlphaP] = gap2;
        gap[kBetaP] = gap1;
        gap[kBeta] = gap2;
        for (int j = 0; j < 4; ++j) {
            const int jw = kWTheta[j];
            const double tv = theta(jw, w2, nome);
            r[j] = theta_deriv(jw, w2, nome, 1) / tv;
            s[j] = theta_deriv(jw, w2, nome, 2) / tv;
        }
        C[kAlpha] = 3.5 * (bp - al) + 1.5 * (be - al) + 1.5 * (ap - al) -
                    (ap - al) * (be - al) / (bp - al);
        C[kAlphaP] = -3.5 * (be - ap) - 1.5 * (bp - ap) + 1.5 * (ap - al) -
                     (ap - al) * (bp - ap) / (be - ap);
        C[kBetaP] = -3.5 * (bp - al) - 1.5 * (bp - ap) + 1.5 * (be - bp) -
                    (be - bp) * (bp - ap) / (bp - al);
        C[kBeta] = 3.5 * (be - ap) + 1.5 * (be - al) + 1.5 * (be - bp) -
                   (be - bp) * (be - al) / (be - ap);
        const double d10 = theta_deriv(1, 0.0, nome, 1);
        const double t30 = theta(3, 0.0, nome);
        const double t1w = theta(1, p.omega, nome);
        const double pre = t1w * t30 * t30 / (48.0 * M_PI * d10);
        for (int j = 0; j < 4; ++j) {
            const double tw = theta(kWTheta[j], w2, nome);
            P[j] = pre / (tw * tw);
        }
    }

    // Q_jk constants (k = 1..4 in the h_jk basis).
    double Q(int j, int k) const {
        const double pi2 = M_PI * M_PI;
        switch (k) {
            case 1:
                return P[j] * (C[j] + kXiSign[j] * 12.0 * M_PI * r[j] +
                               kEtaSign[j] * pi2 / (2.0 * gap[j]) *
                                   (-5.0 * s[j] + 17.0 * r[j] * r[j]));
            case 2: {
                // -12pi(1 + pi r/gap), +12pi(1 + pi r/gap), -12pi(1 - pi r/gap),
                // +12pi(1 - pi r/gap) for j = 0..3
                const double inner = (j < 2) ? 1.0 + M_PI * r[j] / gap[j]
                                             : 1.0 - M_PI * r[j] / gap[j];
                return kXiSign[j] * -12.0 * M_PI * P[j] * inner;
            }
            case 3:
                return kEtaSign[j] * 7.0 * pi2 * P[j] / (2.0 * gap[j]);
            default:
                return kEtaSign[j] * 5.0 * pi2 * P[j] / (2.0 * gap[j]);
        }
    }

    double h(int j, int k, double z) const {
        const double w2 = params.omega / 2.0;
        const double D = theta(4, z - w2, nome) * theta(4, z + w2, nome);
        const int jz = kZTheta[j];
        const double t = theta(jz, z, nome);
        switch (k) {
            case 1: return t * t / D;
            case 2: return theta_deriv(jz, z, nome, 1) * t / D;
            case 3: {
                const double d = theta_deriv(jz, z, nome, 1);
                return d * d / D;
            }
            default: return theta_deriv(jz, z, nome, 2) * t / D;
        }
    }
};

} // namespace

SubleadingConstants constants_at(const ModelParams& params, int n) {
    if (n < 1) throw domain_error("n must be >= 1");
    RowContext ctx(params);
    const Nome& nome = ctx.nome;
    const double z = n * params.omega + params.omega / 2.0;
    const auto [al, ap, bp, be] = ctx.ep;
    SubleadingConstants out;
    const double t30 = theta(3, 0.0, nome);
    const double t4n = theta(4, n * params.omega, nome);
    const double w2 = params.omega / 2.0;
    for (int j = 0; j < 4; ++j) {
        const int jz = kZTheta[j];
        const double tz = theta(jz, z, nome);
        const double tw = theta(kWTheta[j], w2, nome);
        out.Xi[size_t(j)] = t30 * t30 * tz * tz / (tw * tw * t4n * t4n);
        const double rz = theta_deriv(jz, z, nome, 1) / tz;
        const double sz = theta_deriv(jz, z, nome, 2) / tz;
        out.xi[size_t(j)] = kXiSign[j] * (ctx.r[j] - rz);
        out.eta[size_t(j)] = kEtaSign[j] * (5.0 * sz - 5.0 * ctx.s[j] + 7.0 * rz * rz +
                                            17.0 * ctx.r[j] * ctx.r[j] - 24.0 * rz * ctx.r[j]);
        out.C[size_t(j)] = ctx.C[j];
    }
    out.A[kAlpha] = std::sqrt((ap - al) * (bp - al) * (be - al));
    out.A[kAlphaP] = std::sqrt((ap - al) * (bp - ap) * (be - ap));
    out.A[kBetaP] = std::sqrt((bp - al) * (bp - ap) * (be - bp));
    out.A[kBeta] = std::sqrt((be - al) * (be - ap) * (be - bp));
    out.B[kAlpha] = 1.0 / (ap - al) + 1.0 / (bp - al) + 1.0 / (be - al);
    out.B[kAlphaP] = -1.0 / (ap - al) + 1.0 / (bp - ap) + 1.0 / (be - ap);
    out.B[kBetaP] = 1.0 / (bp - al) + 1.0 / (bp - ap) - 1.0 / (be - bp);
    out.B[kBeta] = 1.0 / (be - al) + 1.0 / (be - ap) + 1.0 / (be - bp);
    return out;
}

double f_value(const ModelParams& params, int n) {
    if (n < 1) throw domain_error("n must be >= 1");
    RowContext ctx(params);
    SubleadingConstants k = constants_at(params, n);
    // X_j = (i Xi_j / 96)(C_j + 12 pi xi_j + pi^2 eta_j / (2 gap_j)); the i
    // cancels against the denominator, leaving a real sum.
    double X = 0.0;
    for (int j = 0; j < 4; ++j)
        X += k.Xi[size_t(j)] / 96.0 *
             (k.C[size_t(j)] + 12.0 * M_PI * k.xi[size_t(j)] +
              M_PI * M_PI * k.eta[size_t(j)] / (2.0 * ctx.gap[j]));
    const AsymptoticConstants ac = constants(params);
    const Nome nome = params.nome();
    return X * theta(4, n * params.omega, nome) /
           (ac.A * theta(4, (n + 1.0) * params.omega, nome));
}

double f_tilde(const ModelParams& params, double z) {
    RowContext ctx(params);
    double sum = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int k = 1; k <= 4; ++k) sum += ctx.Q(j, k) * ctx.h(j, k, z);
    return sum;
}

ResidueTriple residue_identities(const ModelParams& params, double z) {
    RowContext ctx(params);
    ResidueTriple r{0.0, 0.0, 0.0};
    for (int j = 0; j < 4; ++j) {
        const double q34 = ctx.Q(j, 3) + ctx.Q(j, 4);
        r.q7 += ctx.Q(j, 2) * ctx.h(j, 1, z);
        r.q8 += q34 * ctx.h(j, 1, z);
        r.q9 += q34 * ctx.h(j, 2, z);
    }
    r.q7 = std::fabs(r.q7);
    r.q8 = std::fabs(r.q8);
    r.q9 = std::fabs(r.q9);
    return r;
}

} // namespace sixv
