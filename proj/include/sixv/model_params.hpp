#ifndef SIXV_MODEL_PARAMS_HPP
#define SIXV_MODEL_PARAMS_HPP

#include "sixv/theta.hpp"

namespace sixv {

// Physical inputs (gamma, t) of the antiferroelectric parameterization
//   a = sinh(gamma - t), b = sinh(gamma + t), c = sinh(2 gamma), |t| < gamma,
// together with every derived scalar used downstream.
struct ModelParams {
    double gamma;
    double t;
    double zeta;   // t / gamma
    double omega;  // pi (1 + zeta) / 2
    double q;      // e^{-pi^2 / (2 gamma)}
    double a, b, c;
    double Delta;  // -cosh(2 gamma) < -1

    static ModelParams create(double gamma, double t);
    Nome nome() const { return Nome{q, M_PI / (2.0 * gamma)}; }
    ModelParams reflected() const { return create(gamma, -t); }
};

} // namespace sixv

#endif
