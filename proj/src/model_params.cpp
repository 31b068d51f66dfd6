#include "sixv/model_params.hpp"

#include <cmath>

#include "sixv/errors.hpp"

namespace sixv {

ModelParams ModelParams::create(double gamma, double t) {
    if (!(gamma > 0.0)) throw domain_error("gamma must be positive");
    if (!(std::fabs(t) < gamma))
        throw domain_error("antiferroelectric region requires |t| < gamma");
    ModelParams p;
    p.gamma = gamma;
    p.t = t;
    p.zeta = t / gamma;
    p.omega = M_PI * (1.0 + p.zeta) / 2.0;
    p.q = std::exp(-M_PI * M_PI / (2.0 * gamma));
    p.a = std::sinh(gamma - t);
    p.b = std::sinh(gamma + t);
    p.c = std::sinh(2.0 * gamma);
    p.Delta = -std::cosh(2.0 * gamma);
    return p;
}

} // namespace sixv
