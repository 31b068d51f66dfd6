#ifndef SIXV_ASYMPTOTICS_HPP
#define SIXV_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "sixv/exact.hpp"
#include "sixv/model_params.hpp"

namespace sixv {

// Leading-order constants of the large-n expansion:
//   F = pi a b theta1'(0) / (2 gamma theta1(omega))   (Z_n ~ C theta4(n w) F^{n^2})
//   G = pi theta1'(0) / (4 gamma theta1(omega))       (h_n/(n!)^2 ~ G^{2n+1} ...)
//   A = pi theta1'(0) / (2 theta1(omega)) = 2 gamma G
//   l = -2 + 2 log(A)                                 (Lagrange multiplier)
struct AsymptoticConstants {
    double F, G, A, l;
};

AsymptoticConstants constants(const ModelParams& params);

// G^{2n+1} theta4((n+1) omega) / theta4(n omega), assembled in log domain.
double h_ratio_asym(const ModelParams& params, int n);

// log C + log theta4(n omega) + n^2 log F  (F^{n^2} overflows doubles).
double z_asym_log(const ModelParams& params, int n, double C);

struct CEstimate {
    double C;                                   // last element of the sequence
    std::vector<std::pair<int, double>> c_n;    // (n, c_n)
};

// c_n = Z_n^exact / (theta4(n omega) F^{n^2}) over n in [n_lo, n_hi], exact
// values at the adaptive precision ladder seeded with max(256, 96 n).
CEstimate estimate_C(const ModelParams& params, int n_lo, int n_hi);

// c_n for a single exact solution (log-domain reduction done in BigReal).
double c_n_from_exact(const ModelParams& params, const ExactSolution& sol);

// Magnitudes of the model-solution residue matrix entries, both as the raw
// theta quotients at u_inf~ = pi(1-zeta)/4 with endpoint prefactor, and in
// the reduced single-ratio form A theta4((n+-1) omega)/theta4(n omega).
struct M1Entries {
    double raw12, raw21;
    double clean12, clean21;
};

M1Entries m1_entries(const ModelParams& params, int n);

} // namespace sixv

#endif
