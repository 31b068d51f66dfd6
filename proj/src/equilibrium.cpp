#include "sixv/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "sixv/elliptic.hpp"

namespace sixv {

Endpoints endpoints(const ModelParams& params) {
    const Nome nome = params.nome();
    const double w2 = params.omega / 2.0;
    auto logd = [&](int j) { return theta_deriv(j, w2, nome, 1) / theta(j, w2, nome); };
    Endpoints ep;
    ep.alpha = -M_PI * logd(1);
    ep.alpha_p = -M_PI * logd(4);
    ep.beta_p = -M_PI * logd(3);
    ep.beta = -M_PI * logd(2);
    return ep;
}

double lagrange_multiplier(const ModelParams& params) {
    const Nome nome = params.nome();
    return -2.0 + 2.0 * std::log(M_PI * theta_deriv(1, 0.0, nome, 1) /
                                 (2.0 * theta(1, params.omega, nome)));
}

namespace {

inline double xlogx(double v) { return v == 0.0 ? 0.0 : v * std::log(std::fabs(v)); }

// int_b^x log(z - s) ds for z >= x, b: stable both for moderate z (direct
// antiderivative) and for z >> x (log1p form; the direct difference cancels
// catastrophically there).
double log_primitive_diff(double z, double b, double x) {
    const double w = z - b, s = x - b;
    if (w > 64.0 * std::fabs(s))
        return -w * std::log1p(-s / w) + s * (std::log(z - x) - 1.0);
    return (-xlogx(z - x) - x) - (-xlogx(z - b) - b);
}

// int_a^b log|x - y| dy
inline double log_abs_integral(double x, double a, double b) {
    return xlogx(x - a) - xlogx(x - b) - (b - a);
}

// How a piece endpoint is treated:
//   kAnchored: substitute w^2 = distance to the wing's own endpoint on that
//     side.  Removes the kernel's inverse-sqrt singularity exactly, even when
//     the piece endpoint only comes near it; the kernel receives w^2 instead
//     of a cancellation-prone recomputation.
//   kLocal: substitute u^2 = distance to the piece endpoint itself (used at
//     logarithmic kinks of F).
enum class SubKind { kNone, kAnchored, kLocal };

// Quadrature over one wing of the support against the elliptic kernel
// 1/sqrt(|R|).
struct Wing {
    double al, ap, bp, be;
    bool right; // [bp, be] if true, [al, ap] otherwise
    QuadratureOptions quad;

    double lo_end() const { return right ? bp : al; }
    double hi_end() const { return right ? be : ap; }

    // kernel with explicit distances to this wing's own endpoints
    double kernel(double xp, double d_lo, double d_hi) const {
        if (right) return 1.0 / std::sqrt((xp - al) * (xp - ap) * d_lo * d_hi);
        return 1.0 / std::sqrt(d_lo * d_hi * (bp - xp) * (be - xp));
    }

    double piece(const std::function<double(double)>& F, double lo, double hi,
                 SubKind lo_kind, SubKind hi_kind) const {
        if (!(hi > lo)) return 0.0;
        if (lo_kind != SubKind::kNone && hi_kind != SubKind::kNone) {
            const double m = 0.5 * (lo + hi);
            return piece(F, lo, m, lo_kind, SubKind::kNone) +
                   piece(F, m, hi, SubKind::kNone, hi_kind);
        }
        if (lo_kind == SubKind::kAnchored) {
            const double a = lo_end();
            return integrate(
                [&](double w) {
                    const double d = w * w;
                    const double xp = a + d;
                    return 2.0 * w * F(xp) * kernel(xp, d, hi_end() - xp);
                },
                std::sqrt(lo - a), std::sqrt(hi - a), quad);
        }
        if (hi_kind == SubKind::kAnchored) {
            const double a = hi_end();
            return integrate(
                [&](double w) {
                    const double d = w * w;
                    const double xp = a - d;
                    return 2.0 * w * F(xp) * kernel(xp, xp - lo_end(), d);
                },
                std::sqrt(a - hi), std::sqrt(a - lo), quad);
        }
        if (lo_kind == SubKind::kLocal) {
            return integrate(
                [&](double u) {
                    const double xp = lo + u * u;
                    return 2.0 * u * F(xp) * kernel(xp, xp - lo_end(), hi_end() - xp);
                },
                0.0, std::sqrt(hi - lo), quad);
        }
        if (hi_kind == SubKind::kLocal) {
            return integrate(
                [&](double u) {
                    const double xp = hi - u * u;
                    return 2.0 * u * F(xp) * kernel(xp, xp - lo_end(), hi_end() - xp);
                },
                0.0, std::sqrt(hi - lo), quad);
        }
        return integrate(
            [&](double xp) { return F(xp) * kernel(xp, xp - lo_end(), hi_end() - xp); },
            lo, hi, quad);
    }

    // integral over [lo, hi] with the kernel singularities handled on both sides
    double span(const std::function<double(double)>& F, double lo, double hi) const {
        return piece(F, lo, hi, SubKind::kAnchored, SubKind::kAnchored);
    }

    // full-wing integral of a smooth F against the kernel
    double full(const std::function<double(double)>& F) const {
        return span(F, lo_end(), hi_end());
    }

    // full-wing integral of an F with a logarithmic kink at x
    double full_with_kink(const std::function<double(double)>& F, double x) const {
        if (x > lo_end() && x < hi_end())
            return piece(F, lo_end(), x, SubKind::kAnchored, SubKind::kLocal) +
                   piece(F, x, hi_end(), SubKind::kLocal, SubKind::kAnchored);
        return full(F);
    }
};

} // namespace

EquilibriumMeasure::EquilibriumMeasure(const ModelParams& params, QuadratureOptions quad)
    : params_(params), ep_(endpoints(params)), quad_(quad) {}

namespace {
Wing right_wing(const Endpoints& ep, const QuadratureOptions& q) {
    return Wing{ep.alpha, ep.alpha_p, ep.beta_p, ep.beta, true, q};
}
Wing left_wing(const Endpoints& ep, const QuadratureOptions& q) {
    return Wing{ep.alpha, ep.alpha_p, ep.beta_p, ep.beta, false, q};
}
} // namespace

double EquilibriumMeasure::density_right(double x) const {
    Wing w = right_wing(ep_, quad_);
    return w.span([](double) { return 1.0; }, x, ep_.beta) / M_PI;
}

double EquilibriumMeasure::density_left(double x) const {
    Wing w = left_wing(ep_, quad_);
    return w.span([](double) { return 1.0; }, ep_.alpha, x) / M_PI;
}

double EquilibriumMeasure::density(double x) const {
    const auto [al, ap, bp, be] = ep_;
    if (x < al || x > be) return 0.0;
    if (x >= ap && x <= bp) return 1.0 / (2.0 * params_.gamma);
    double rho = (x < ap) ? density_left(x) : density_right(x);
    if (!std::isfinite(rho)) throw quadrature_error("density quadrature breakdown");
    return rho;
}

double EquilibriumMeasure::sqrtR_tail_integral(double z) const {
    // int_z^infty dz'/sqrt(R(z')) on the positive branch, valid for z >= beta.
    const auto [al, ap, bp, be] = ep_;
    const double W = std::max(be - al, 1.0);
    // near part, z' = beta + v^2
    auto g = [&](double v) {
        const double zp = be + v * v;
        return 2.0 / std::sqrt((zp - al) * (zp - ap) * (zp - bp));
    };
    double near = integrate(g, std::sqrt(z - be), std::sqrt(z - be + W), quad_);
    // tail via z' = A + s/(1-s)
    const double A = z + W;
    auto h = [&](double s) {
        const double zp = A + s / (1.0 - s);
        const double d = 1.0 - s;
        return 1.0 / (std::sqrt((zp - al) * (zp - ap) * (zp - bp) * (zp - be)) * d * d);
    };
    return near + integrate(h, 0.0, 1.0, quad_);
}

double EquilibriumMeasure::resolvent(double z) const {
    const auto [al, ap, bp, be] = ep_;
    if (z >= al && z <= be)
        throw domain_error("resolvent: on-cut evaluation not supported");
    if (z > be) return sqrtR_tail_integral(z);
    // z < alpha: mirror branch, negative values
    const double W = std::max(be - al, 1.0);
    auto g = [&](double v) {
        const double zp = al - v * v;
        return 2.0 / std::sqrt((ap - zp) * (bp - zp) * (be - zp));
    };
    double near = integrate(g, std::sqrt(al - z), std::sqrt(al - z + W), quad_);
    const double A = z - W;
    auto h = [&](double s) {
        const double zp = A - s / (1.0 - s);
        const double d = 1.0 - s;
        return 1.0 / (std::sqrt((al - zp) * (ap - zp) * (bp - zp) * (be - zp)) * d * d);
    };
    return -(near + integrate(h, 0.0, 1.0, quad_));
}

double EquilibriumMeasure::g_function(double z) const {
    const auto [al, ap, bp, be] = ep_;
    if (!(z >= be)) throw domain_error("g_function requires z >= beta");
    // plateau contribution in closed form
    const double g_mid = log_primitive_diff(z, ap, bp) / (2.0 * params_.gamma);
    // wings by exchanging the order of integration:
    //   int_{b'}^{b} log(z-x) rho(x) dx
    //     = (1/pi) int kernel(x') int_{b'}^{x'} log(z-x) dx dx'
    const double g_right =
        right_wing(ep_, quad_).full(
            [&](double xp) { return log_primitive_diff(z, bp, xp); }) /
        M_PI;
    const double g_left =
        left_wing(ep_, quad_).full(
            [&](double xp) { return -log_primitive_diff(z, ap, xp); }) /
        M_PI;
    return g_mid + g_left + g_right;
}

double EquilibriumMeasure::wing_mass_left(double x) const {
    return left_wing(ep_, quad_).span([&](double xp) { return x - xp; }, ep_.alpha, x) /
           M_PI;
}

double EquilibriumMeasure::wing_mass_right(double x) const {
    return right_wing(ep_, quad_).span([&](double xp) { return xp - x; }, x, ep_.beta) /
           M_PI;
}

double EquilibriumMeasure::g_jump(double x) const {
    const auto [al, ap, bp, be] = ep_;
    if (x <= al) return 1.0;
    if (x >= be) return 0.0;
    if (x < ap) return 1.0 - wing_mass_left(x);
    if (x <= bp) return (1.0 + params_.zeta) / 2.0 - x / (2.0 * params_.gamma);
    return wing_mass_right(x);
}

double EquilibriumMeasure::log_moment(double x) const {
    const auto [al, ap, bp, be] = ep_;
    const double mid = log_abs_integral(x, ap, bp) / (2.0 * params_.gamma);
    const double right =
        right_wing(ep_, quad_).full_with_kink(
            [&](double xp) { return log_abs_integral(x, bp, xp); }, x) /
        M_PI;
    const double left =
        left_wing(ep_, quad_).full_with_kink(
            [&](double xp) { return log_abs_integral(x, xp, ap); }, x) /
        M_PI;
    return mid + left + right;
}

double EquilibriumMeasure::variational_residual(double x) const {
    const double V = std::fabs(x) - params_.zeta * x;
    return 2.0 * log_moment(x) - V - lagrange_multiplier(params_);
}

double EquilibriumMeasure::mass() const {
    const auto [al, ap, bp, be] = ep_;
    const double left =
        left_wing(ep_, quad_).full([&](double xp) { return ap - xp; }) / M_PI;
    const double right =
        right_wing(ep_, quad_).full([&](double xp) { return xp - bp; }) / M_PI;
    return left + (bp - ap) / (2.0 * params_.gamma) + right;
}

double EquilibriumMeasure::mass_from_zero_to_beta() const {
    return ep_.beta_p / (2.0 * params_.gamma) + wing_mass_right(ep_.beta_p);
}

double EquilibriumMeasure::energy_diagnostic() const {
    const auto [al, ap, bp, be] = ep_;
    const double zt = params_.zeta;
    // plateau: int (|x| - zeta x)/(2 gamma) over [alpha', beta']
    const double mid = ((1.0 + zt) * ap * ap / 2.0 + (1.0 - zt) * bp * bp / 2.0) /
                       (2.0 * params_.gamma);
    // antiderivatives of V on each wing (x > 0 right, x < 0 left)
    auto Wr = [&](double v) { return (1.0 - zt) * v * v / 2.0; };
    auto Wl = [&](double v) { return -(1.0 + zt) * v * v / 2.0; };
    const double right =
        right_wing(ep_, quad_).full([&](double xp) { return Wr(xp) - Wr(bp); }) / M_PI;
    const double left =
        left_wing(ep_, quad_).full([&](double xp) { return Wl(ap) - Wl(xp); }) / M_PI;
    const double vmean = mid + left + right;
    return 0.5 * vmean - 0.5 * lagrange_multiplier(params_);
}

ConsistencyReport EquilibriumMeasure::elliptic_consistency() const {
    const auto [al, ap, bp, be] = ep_;
    ConsistencyReport r;
    r.k = std::sqrt((be - al) * (bp - ap) / ((bp - al) * (be - ap)));
    const double k2 = r.k * r.k;
    // K by quadrature of the Legendre normal form, v = 1 - u^2 at the right end
    r.K = integrate(
        [&](double u) {
            const double v = 1.0 - u * u;
            return 2.0 / std::sqrt((2.0 - u * u) * (1.0 - k2 * v * v));
        },
        0.0, 1.0, quad_);
    // K' over [1, 1/k], singular at both ends
    {
        const double top = 1.0 / r.k;
        const double m = 0.5 * (1.0 + top);
        const double p1 = integrate(
            [&](double u) {
                const double v = 1.0 + u * u;
                return 2.0 / std::sqrt((2.0 + u * u) * (1.0 - k2 * v * v));
            },
            0.0, std::sqrt(m - 1.0), quad_);
        const double p2 = integrate(
            [&](double u) {
                const double v = top - u * u;
                return 2.0 / std::sqrt((v * v - 1.0) * r.k * (1.0 + r.k * v));
            },
            0.0, std::sqrt(top - m), quad_);
        r.Kprime = p1 + p2;
    }
    r.u_inf = 0.5 * std::sqrt((bp - al) * (be - ap)) * sqrtR_tail_integral(be);
    r.res_ratio = std::fabs(r.Kprime / r.K - M_PI / (2.0 * params_.gamma));
    r.res_geom = std::fabs(std::sqrt((bp - al) * (be - ap)) - 2.0 * r.K);
    r.res_uinf = std::fabs(r.u_inf / r.K - (1.0 - params_.zeta) / 2.0);
    EllipticContext ctx = EllipticContext::from_gamma(params_.gamma);
    const double s = sn(r.u_inf, ctx);
    r.res_sn = std::fabs((bp - al) / (be - al) - s * s);
    return r;
}

} // namespace sixv
