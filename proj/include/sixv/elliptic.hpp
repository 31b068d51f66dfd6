#ifndef SIXV_ELLIPTIC_HPP
#define SIXV_ELLIPTIC_HPP

#include "sixv/theta.hpp"

namespace sixv {

// Complete elliptic integrals and the theta-ratio Jacobi functions.
// Everything is driven by a single nome; the modulus comes from the theta
// constants, k = theta2(0)^2 / theta3(0)^2, and K = (pi/2) theta3(0)^2.
struct EllipticContext {
    double k;
    double K;
    double Kprime;
    Nome nome;

    static EllipticContext from_gamma(double gamma);
};

double sn(double u, const EllipticContext& ctx);
double cn(double u, const EllipticContext& ctx);
double dn(double u, const EllipticContext& ctx);

// Jacobi Z(u) = Theta'(u)/Theta(u) with Theta(u) = theta4(pi u / (2K)).
double jacobi_Z(double u, const EllipticContext& ctx);

} // namespace sixv

#endif
