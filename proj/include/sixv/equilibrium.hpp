#ifndef SIXV_EQUILIBRIUM_HPP
#define SIXV_EQUILIBRIUM_HPP

#include "sixv/model_params.hpp"
#include "sixv/quadrature.hpp"

namespace sixv {

// Support endpoints alpha < alpha' < 0 < beta' < beta of the equilibrium
// measure; a saturated region [alpha', beta'] carries density 1/(2 gamma).
struct Endpoints {
    double alpha, alpha_p, beta_p, beta;
};

// Log-derivative endpoint formulas at omega/2 with the nome of the params.
Endpoints endpoints(const ModelParams& params);

// l = -2 + 2 log(pi theta1'(0) / (2 theta1(omega)))
double lagrange_multiplier(const ModelParams& params);

struct ConsistencyReport {
    double k;        // modulus from the endpoint cross-ratio
    double K, Kprime, u_inf;  // by direct quadrature
    double res_ratio;   // |K'/K - pi/(2 gamma)|
    double res_geom;    // |sqrt((beta'-alpha)(beta-alpha')) - 2K|
    double res_uinf;    // |u_inf/K - (1-zeta)/2|
    double res_sn;      // |(beta'-alpha)/(beta-alpha) - sn^2(u_inf)|
};

class EquilibriumMeasure {
public:
    EquilibriumMeasure(const ModelParams& params, QuadratureOptions quad = {});

    const ModelParams& params() const { return params_; }
    const Endpoints& support() const { return ep_; }

    // Piecewise density: elliptic-integral tails, 1/(2 gamma) plateau.
    // Returns 0 outside [alpha, beta].
    double density(double x) const;

    // Resolvent on the real axis off the support (z > beta or z < alpha).
    double resolvent(double z) const;

    // g(z) = int log(z - x) rho(x) dx for z > beta.
    double g_function(double z) const;

    // Im G(x) / (2 pi) for x in [alpha, beta] (the g-jump across the cut).
    double g_jump(double x) const;

    // 2 int log|x-y| rho(y) dy - (|x| - zeta x) - l; zero on the
    // unsaturated support, >= 0 on the saturated band.
    double variational_residual(double x) const;

    // Partial masses used by tests and g_jump.
    double mass() const;                  // int rho over the whole support
    double mass_from_zero_to_beta() const;

    // Minimal-energy diagnostic E0 = (1/2) int V rho - l/2 (no reference value).
    double energy_diagnostic() const;

    ConsistencyReport elliptic_consistency() const;

private:
    double density_left(double x) const;   // x in [alpha, alpha']
    double density_right(double x) const;  // x in [beta', beta]
    double sqrtR_tail_integral(double z) const;  // int_z^inf dz'/sqrt(R), z >= beta
    double wing_mass_left(double x) const;   // int_alpha^x rho, x in [alpha, alpha']
    double wing_mass_right(double x) const;  // int_x^beta rho, x in [beta', beta]
    double log_moment(double x) const;       // int log|x-y| rho(y) dy

    ModelParams params_;
    Endpoints ep_;
    QuadratureOptions quad_;
};

} // namespace sixv

#endif
