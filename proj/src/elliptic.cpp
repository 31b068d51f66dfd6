#include "sixv/elliptic.hpp"

#include <cmath>

#include "sixv/errors.hpp"

namespace sixv {

EllipticContext EllipticContext::from_gamma(double gamma) {
    if (!(gamma > 0.0)) throw domain_error("gamma must be positive");
    EllipticContext ctx;
    ctx.nome = Nome::from_gamma(gamma);
    const double t20 = theta(2, 0.0, ctx.nome);
    const double t30 = theta(3, 0.0, ctx.nome);
    ctx.K = 0.5 * M_PI * t30 * t30;
    ctx.Kprime = ctx.K * M_PI / (2.0 * gamma); // K'/K = pi/(2 gamma)
    ctx.k = (t20 * t20) / (t30 * t30);
    return ctx;
}

double sn(double u, const EllipticContext& ctx) {
    const double v = M_PI * u / (2.0 * ctx.K);
    return theta(3, 0.0, ctx.nome) / theta(2, 0.0, ctx.nome) *
           theta(1, v, ctx.nome) / theta(4, v, ctx.nome);
}

double cn(double u, const EllipticContext& ctx) {
    const double v = M_PI * u / (2.0 * ctx.K);
    return theta(4, 0.0, ctx.nome) / theta(2, 0.0, ctx.nome) *
           theta(2, v, ctx.nome) / theta(4, v, ctx.nome);
}

double dn(double u, const EllipticContext& ctx) {
    const double v = M_PI * u / (2.0 * ctx.K);
    return theta(4, 0.0, ctx.nome) / theta(3, 0.0, ctx.nome) *
           theta(3, v, ctx.nome) / theta(4, v, ctx.nome);
}

double jacobi_Z(double u, const EllipticContext& ctx) {
    const double v = M_PI * u / (2.0 * ctx.K);
    return M_PI / (2.0 * ctx.K) * theta_deriv(4, v, ctx.nome, 1) / theta(4, v, ctx.nome);
}

} // namespace sixv
