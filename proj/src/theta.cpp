#include "sixv/theta.hpp"

#include <cmath>
#include <limits>

namespace sixv {

Nome Nome::from_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("nome q must lie in (0,1)");
    return Nome{q, -std::log(q) / M_PI};
}

Nome Nome::from_gamma(double gamma) {
    if (!(gamma > 0.0)) throw domain_error("gamma must be positive");
    return Nome{std::exp(-M_PI * M_PI / (2.0 * gamma)), M_PI / (2.0 * gamma)};
}

namespace {

constexpr int kMaxTerms = 256;

void require_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("nome q must lie in (0,1)");
}

void require_j(int j) {
    if (j < 1 || j > 4) throw domain_error("theta index must be 1..4");
}

// Half-integer series (theta_1, theta_2).  kind: 0 -> value, 1 -> d/dz,
// 2 -> d^2/dz^2.  theta_1 uses sin and alternating signs.
double sum_half(bool is_theta1, double z, double q, int kind) {
    const double eps = std::numeric_limits<double>::epsilon();
    double sum = 0.0, scale = 0.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double m = 2.0 * n + 1.0;
        const double qp = std::pow(q, (n + 0.5) * (n + 0.5));
        double env = 2.0 * qp;
        if (kind == 1) env *= m;
        if (kind == 2) env *= m * m;
        double term;
        if (is_theta1) {
            term = (kind == 1) ? env * std::cos(m * z) : env * std::sin(m * z);
            if (kind == 2) term = -term;
            if (n % 2) term = -term;
        } else {
            term = (kind == 1) ? -env * std::sin(m * z) : env * std::cos(m * z);
            if (kind == 2) term = -term;
        }
        sum += term;
        if (env > scale) scale = env;
        if (n >= 3 && env < eps * std::max(std::fabs(sum), scale)) break;
    }
    return sum;
}

// Integer series (theta_3, theta_4).
double sum_int(bool is_theta4, double z, double q, int kind) {
    const double eps = std::numeric_limits<double>::epsilon();
    double sum = (kind == 0) ? 1.0 : 0.0;
    double scale = 1.0;
    for (int n = 1; n < kMaxTerms; ++n) {
        const double m = 2.0 * n;
        const double qp = std::pow(q, double(n) * n);
        double env = 2.0 * qp;
        if (kind == 1) env *= m;
        if (kind == 2) env *= m * m;
        double term = (kind == 1) ? -env * std::sin(m * z) : env * std::cos(m * z);
        if (kind == 2) term = -term;
        if (is_theta4 && (n % 2)) term = -term;
        sum += term;
        if (env > scale) scale = env;
        if (n >= 3 && env < eps * std::max(std::fabs(sum), scale)) break;
    }
    return sum;
}

double theta_impl(int j, double z, double q, int kind) {
    require_j(j);
    require_q(q);
    // All four thetas have period 2*pi; keep series arguments small.
    z = std::remainder(z, 2.0 * M_PI);
    switch (j) {
        case 1: return sum_half(true, z, q, kind);
        case 2: return sum_half(false, z, q, kind);
        case 3: return sum_int(false, z, q, kind);
        default: return sum_int(true, z, q, kind);
    }
}

} // namespace

double theta(int j, double z, const Nome& nome) { return theta_impl(j, z, nome.q, 0); }

double theta_deriv(int j, double z, const Nome& nome, int order) {
    if (order != 1 && order != 2) throw domain_error("theta_deriv order must be 1 or 2");
    return theta_impl(j, z, nome.q, order);
}

std::complex<double> theta_c(int j, std::complex<double> z, const Nome& nome) {
    require_j(j);
    require_q(nome.q);
    const double eps = std::numeric_limits<double>::epsilon();
    const double q = nome.q;
    const double grow = std::exp(2.0 * std::fabs(z.imag()));
    std::complex<double> sum = 0.0;
    double scale = 0.0;
    if (j == 1 || j == 2) {
        double growth = std::exp(std::fabs(z.imag()));
        for (int n = 0; n < kMaxTerms; ++n) {
            const double m = 2.0 * n + 1.0;
            const double qp = std::pow(q, (n + 0.5) * (n + 0.5));
            std::complex<double> term =
                (j == 1) ? 2.0 * qp * std::sin(m * z) : 2.0 * qp * std::cos(m * z);
            if (j == 1 && (n % 2)) term = -term;
            sum += term;
            double env = 2.0 * qp * std::pow(growth, m);
            if (env > scale) scale = env;
            if (n >= 3 && env < eps * std::max(std::abs(sum), scale)) break;
        }
    } else {
        sum = 1.0;
        scale = 1.0;
        for (int n = 1; n < kMaxTerms; ++n) {
            const double qp = std::pow(q, double(n) * n);
            std::complex<double> term = 2.0 * qp * std::cos(2.0 * n * z);
            if (j == 4 && (n % 2)) term = -term;
            sum += term;
            double env = 2.0 * qp * std::pow(grow, n);
            if (env > scale) scale = env;
            if (n >= 3 && env < eps * std::max(std::abs(sum), scale)) break;
        }
    }
    return sum;
}

namespace {

BigReal theta_big_impl(int j, const BigReal& z_in, const BigReal& q, int kind) {
    require_j(j);
    if (!(q.sign() > 0) || !(q < BigReal(1L, q.precision())))
        throw domain_error("nome q must lie in (0,1)");
    const long P = std::min(z_in.precision(), q.precision());
    const long Pw = P + 32; // guard bits
    BigReal qb(0.0, Pw);
    mpfr_set(qb.raw(), q.raw(), MPFR_RNDN);
    const BigReal two_pi = BigReal::pi(Pw) * 2L;
    BigReal z(0.0, Pw);
    mpfr_set(z.raw(), z_in.raw(), MPFR_RNDN);
    {   // reduce modulo 2*pi
        BigReal k = z / two_pi;
        mpfr_round(k.raw(), k.raw());
        z = z - k * two_pi;
    }
    BigReal eps(Pw);
    mpfr_set_ui_2exp(eps.raw(), 1, static_cast<mpfr_exp_t>(-P), MPFR_RNDN);

    const bool half = (j == 1 || j == 2);
    BigReal sum(0L, Pw), scale(0L, Pw);
    if (!half && kind == 0) {
        sum = BigReal(1L, Pw);
        scale = BigReal(1L, Pw);
    }
    // Iterated power: q^{(n+1/2)^2} = q^{1/4} * prod q^{2i}; q^{n^2} = prod q^{2i-1}
    BigReal e = half ? sqrt(sqrt(qb)) : BigReal(1L, Pw);
    const BigReal q2 = qb * qb;
    BigReal step = half ? q2 : qb; // multiplier applied before term n (n>=1)
    for (int n = half ? 0 : 1; n < kMaxTerms; ++n) {
        if (!half || n > 0) {
            e *= step;
            step *= q2;
        }
        const long m = half ? 2L * n + 1L : 2L * n;
        BigReal env = e * 2L;
        if (kind >= 1) env = env * m;
        if (kind == 2) env = env * m;
        const bool use_sin = (j == 1) ? (kind != 1) : (kind == 1);
        BigReal term = use_sin ? sin(z * m) : cos(z * m);
        term = term * env;
        if (j == 2 && kind == 1) term = -term;
        if ((j == 3 || j == 4) && kind == 1) term = -term;
        if (kind == 2) term = -term;
        if ((j == 1 || j == 4) && (n % 2)) term = -term;
        sum += term;
        if (env > scale) scale = env;
        if (n >= 3) {
            BigReal bound = abs(sum);
            if (scale > bound) bound = scale;
            if (env < eps * bound) break;
        }
    }
    BigReal out(P);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

} // namespace

BigReal theta_big(int j, const BigReal& z, const BigReal& q) {
    return theta_big_impl(j, z, q, 0);
}

BigReal theta_deriv_big(int j, const BigReal& z, const BigReal& q, int order) {
    if (order != 1 && order != 2) throw domain_error("theta_deriv order must be 1 or 2");
    return theta_big_impl(j, z, q, order);
}

// ---------------------------------------------------------------------------
// Identity suite
// ---------------------------------------------------------------------------

namespace {

struct ThetaAt {
    double t[5], d[5], s[5]; // value, theta', theta'' for j=1..4 (index 0 unused)
    ThetaAt(double z, const Nome& nome) {
        for (int j = 1; j <= 4; ++j) {
            t[j] = theta(j, z, nome);
            d[j] = theta_deriv(j, z, nome, 1);
            s[j] = theta_deriv(j, z, nome, 2);
        }
    }
};

void guard(double den, const char* what) {
    if (std::fabs(den) < 1e-6)
        throw pole_error(std::string("identity evaluated at a pole of ") + what);
}

// Q-row constants built from the theta closed forms of the gaps
// beta'-alpha and beta-alpha' (the eq8c product formulas), with y = omega.
struct QRows {
    double Q2[5];   // Q_{j2}
    double Q34[5];  // Q_{j3} + Q_{j4}
    QRows(double y, const Nome& nome) {
        const double w2 = y / 2.0;
        double tw[5], dw[5];
        for (int j = 1; j <= 4; ++j) {
            tw[j] = theta(j, w2, nome);
            dw[j] = theta_deriv(j, w2, nome, 1);
        }
        guard(tw[1], "theta1(omega/2)");
        guard(tw[2], "theta2(omega/2)");
        const double t30 = theta(3, 0.0, nome);
        const double d10 = theta_deriv(1, 0.0, nome, 1);
        const double t1y = theta(1, y, nome);
        const double gap1 = M_PI * t30 * t30 * tw[2] * tw[4] / (tw[1] * tw[3]); // beta'-alpha
        const double gap2 = M_PI * t30 * t30 * tw[1] * tw[3] / (tw[2] * tw[4]); // beta-alpha'
        const double r1 = dw[1] / tw[1], r2 = dw[2] / tw[2], r3 = dw[3] / tw[3],
                     r4 = dw[4] / tw[4];
        const double pre = t1y * t30 * t30 / (48.0 * M_PI * d10);
        const double P1 = pre / (tw[3] * tw[3]);
        const double P2 = pre / (tw[2] * tw[2]);
        const double P3 = pre / (tw[1] * tw[1]);
        const double P4 = pre / (tw[4] * tw[4]);
        Q2[1] = P1 * (-12.0 * M_PI - 12.0 * M_PI * M_PI * r3 / gap1);
        Q2[2] = P2 * (12.0 * M_PI + 12.0 * M_PI * M_PI * r2 / gap2);
        Q2[3] = P3 * (-12.0 * M_PI + 12.0 * M_PI * M_PI * r1 / gap1);
        Q2[4] = P4 * (12.0 * M_PI - 12.0 * M_PI * M_PI * r4 / gap2);
        Q34[1] = 6.0 * M_PI * M_PI * P1 / gap1;
        Q34[2] = -6.0 * M_PI * M_PI * P2 / gap2;
        Q34[3] = -6.0 * M_PI * M_PI * P3 / gap1;
        Q34[4] = 6.0 * M_PI * M_PI * P4 / gap2;
    }
};

// Numerator theta index of row j in the h_{jk} basis: theta4, theta1,
// theta2, theta3 for j = 1..4.
constexpr int kRowTheta[5] = {0, 4, 1, 2, 3};

double qsum_residual(ThetaIdentity id, double z, double y, const Nome& nome) {
    QRows rows(y, nome);
    const double Dv = theta(4, z - y / 2.0, nome) * theta(4, z + y / 2.0, nome);
    guard(Dv, "theta4(z -/+ omega/2)");
    double sum = 0.0;
    for (int j = 1; j <= 4; ++j) {
        const int jj = kRowTheta[j];
        const double tj = theta(jj, z, nome);
        const double dj = theta_deriv(jj, z, nome, 1);
        switch (id) {
            case ThetaIdentity::Q7: sum += rows.Q2[j] * tj * tj / Dv; break;
            case ThetaIdentity::Q8: sum += rows.Q34[j] * tj * tj / Dv; break;
            default: sum += rows.Q34[j] * dj * tj / Dv; break; // Q9
        }
    }
    return std::fabs(sum);
}

} // namespace

const std::vector<std::pair<std::string, ThetaIdentity>>& identity_table() {
    static const std::vector<std::pair<std::string, ThetaIdentity>> table = {
        {"main13a", ThetaIdentity::main13a},
        {"4a", ThetaIdentity::i4a},
        {"4b", ThetaIdentity::i4b},
        {"4c", ThetaIdentity::i4c},
        {"evf3a", ThetaIdentity::evf3a},
        {"evf3b", ThetaIdentity::evf3b},
        {"evf3c", ThetaIdentity::evf3c},
        {"evf2a", ThetaIdentity::evf2a},
        {"evf2b", ThetaIdentity::evf2b},
        {"evf2c", ThetaIdentity::evf2c},
        {"Q23a", ThetaIdentity::Q23a},
        {"Q23b", ThetaIdentity::Q23b},
        {"Q23c", ThetaIdentity::Q23c},
        {"2", ThetaIdentity::dup2},
        {"me4", ThetaIdentity::me4},
        {"Q26", ThetaIdentity::Q26},
        {"Q11", ThetaIdentity::Q11},
        {"evf6a", ThetaIdentity::evf6a},
        {"evf6b", ThetaIdentity::evf6b},
        {"evf6c", ThetaIdentity::evf6c},
        {"evf6d", ThetaIdentity::evf6d},
        {"8", ThetaIdentity::logdup8},
        {"Q7", ThetaIdentity::Q7},
        {"Q8", ThetaIdentity::Q8},
        {"Q9", ThetaIdentity::Q9},
    };
    return table;
}

ThetaIdentity parse_identity(const std::string& tag) {
    for (const auto& [name, id] : identity_table())
        if (name == tag) return id;
    throw domain_error("unknown identity tag: " + tag);
}

double identity_residual(ThetaIdentity id, double z, double y, const Nome& nome) {
    using TI = ThetaIdentity;
    if (id == TI::Q7 || id == TI::Q8 || id == TI::Q9) return qsum_residual(id, z, y, nome);

    ThetaAt a(z, nome);
    const double t10 = 0.0; (void)t10;
    const double t20 = theta(2, 0.0, nome), t30 = theta(3, 0.0, nome),
                 t40 = theta(4, 0.0, nome);
    const double d10 = theta_deriv(1, 0.0, nome, 1);
    const double t1 = a.t[1], t2 = a.t[2], t3 = a.t[3], t4 = a.t[4];
    const double d1 = a.d[1], d2 = a.d[2], d3 = a.d[3], d4 = a.d[4];
    const double s1 = a.s[1], s2 = a.s[2], s3 = a.s[3], s4 = a.s[4];

    auto sq = [](double x) { return x * x; };

    switch (id) {
        case TI::main13a:
            return std::fabs(d10 - t20 * t30 * t40);
        case TI::i4a:
            guard(t1, "theta1(z)");
            return std::fabs(d4 - (d1 * t4 - sq(t40) * t2 * t3) / t1);
        case TI::i4b:
            guard(t1, "theta1(z)");
            return std::fabs(d2 - (d1 * t2 - sq(t20) * t3 * t4) / t1);
        case TI::i4c:
            guard(t1, "theta1(z)");
            return std::fabs(d3 - (d1 * t3 - sq(t30) * t2 * t4) / t1);
        case TI::evf3a:
            guard(t2, "theta2(z)");
            return std::fabs(d4 - (d2 * t4 + t1 * t3 * sq(t30)) / t2);
        case TI::evf3b:
            guard(t2, "theta2(z)");
            return std::fabs(d1 - (d2 * t1 + t3 * t4 * sq(t20)) / t2);
        case TI::evf3c:
            guard(t2, "theta2(z)");
            return std::fabs(d3 - (d2 * t3 + t1 * t4 * sq(t40)) / t2);
        case TI::evf2a:
            guard(t2, "theta2(z)");
            return std::fabs(s4 - (s2 * t4 / t2 + 2.0 * d2 * t1 * t3 * sq(t30) / sq(t2) +
                                   t4 * sq(t30) * (sq(t3) * sq(t20) + sq(t1) * sq(t40)) / sq(t2)));
        case TI::evf2b:
            guard(t2, "theta2(z)");
            return std::fabs(s1 - (s2 * t1 / t2 + 2.0 * d2 * t3 * t4 * sq(t20) / sq(t2) +
                                   t1 * sq(t20) * (sq(t3) * sq(t30) + sq(t4) * sq(t40)) / sq(t2)));
        case TI::evf2c:
            guard(t2, "theta2(z)");
            return std::fabs(s3 - (s2 * t3 / t2 + 2.0 * d2 * t1 * t4 * sq(t40) / sq(t2) +
                                   t3 * sq(t40) * (sq(t20) * sq(t4) + sq(t30) * sq(t1)) / sq(t2)));
        case TI::Q23a:
            guard(t1, "theta1(z)");
            return std::fabs(s4 - (s1 * t4 / t1 - 2.0 * d1 * t2 * t3 * sq(t40) / sq(t1) +
                                   sq(t40) * t4 * (sq(t20) * sq(t3) + sq(t30) * sq(t2)) / sq(t1)));
        case TI::Q23b:
            guard(t1, "theta1(z)");
            return std::fabs(s2 - (s1 * t2 / t1 - 2.0 * d1 * t3 * t4 * sq(t20) / sq(t1) +
                                   sq(t20) * t2 * (sq(t30) * sq(t4) + sq(t40) * sq(t3)) / sq(t1)));
        case TI::Q23c:
            guard(t1, "theta1(z)");
            return std::fabs(s3 - (s1 * t3 / t1 - 2.0 * d1 * t2 * t4 * sq(t30) / sq(t1) +
                                   sq(t30) * t3 * (sq(t20) * sq(t4) + sq(t40) * sq(t2)) / sq(t1)));
        case TI::dup2:
            return std::fabs(theta(1, 2.0 * z, nome) - 2.0 * t1 * t2 * t3 * t4 / d10);
        case TI::me4:
            return std::fabs(theta(3, 2.0 * z, nome) * t30 * sq(t20) -
                             (sq(t1) * sq(t4) + sq(t2) * sq(t3)));
        case TI::Q26: {
            const double lhs = theta(4, 2.0 * z, nome) * t40 * sq(t40);
            return std::max(std::fabs(lhs - (sq(sq(t3)) - sq(sq(t2)))),
                            std::fabs(lhs - (sq(sq(t4)) - sq(sq(t1)))));
        }
        case TI::Q11: {
            const double lhs =
                theta(3, y + z, nome) * theta(3, y - z, nome) * sq(t20);
            const double t3y = theta(3, y, nome), t4y = theta(4, y, nome);
            const double t1y = theta(1, y, nome), t2y = theta(2, y, nome);
            return std::max(std::fabs(lhs - (sq(t3y) * sq(t2) + sq(t4y) * sq(t1))),
                            std::fabs(lhs - (sq(t1y) * sq(t4) + sq(t2y) * sq(t3))));
        }
        case TI::evf6a:
            return std::fabs(sq(t1) * sq(t40) - (sq(t3) * sq(t20) - sq(t2) * sq(t30)));
        case TI::evf6b:
            return std::fabs(sq(t2) * sq(t40) - (sq(t4) * sq(t20) - sq(t1) * sq(t30)));
        case TI::evf6c:
            return std::fabs(sq(t3) * sq(t40) - (sq(t4) * sq(t30) - sq(t1) * sq(t20)));
        case TI::evf6d:
            return std::fabs(sq(t4) * sq(t40) - (sq(t3) * sq(t30) - sq(t2) * sq(t20)));
        case TI::logdup8: {
            const double t1z2 = theta(1, 2.0 * z, nome);
            guard(t1z2, "theta1(2z)");
            guard(t1, "theta1(z)");
            return std::fabs(theta_deriv(1, 2.0 * z, nome, 1) / t1z2 -
                             0.5 * (d1 / t1 + d2 / t2 + d3 / t3 + d4 / t4));
        }
        default:
            throw domain_error("unhandled identity");
    }
}

double identity_residual(const std::string& tag, double z, double y, const Nome& nome) {
    return identity_residual(parse_identity(tag), z, y, nome);
}

} // namespace sixv
