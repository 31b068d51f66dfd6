#ifndef SIXV_SUBLEADING_HPP
#define SIXV_SUBLEADING_HPP

#include <array>

#include "sixv/model_params.hpp"

namespace sixv {

// Turning-point index order used throughout: alpha, alpha', beta', beta.
enum TurningPoint { kAlpha = 0, kAlphaP = 1, kBetaP = 2, kBeta = 3 };

// The constant families of the subleading correction, evaluated at
// z = n omega + omega/2.
struct SubleadingConstants {
    std::array<double, 4> Xi;   // theta-quotient prefactors
    std::array<double, 4> xi;   // first log-derivative differences
    std::array<double, 4> eta;  // second-derivative combinations
    std::array<double, 4> C;    // linear endpoint-gap combinations
    std::array<double, 4> A;    // sqrt of gap products
    std::array<double, 4> B;    // reciprocal-gap sums
};

SubleadingConstants constants_at(const ModelParams& params, int n);

// f(n omega, omega): assembles the four X contributions and divides by
// i A theta4((n+1) omega)/theta4(n omega).  Identically 1/6.
double f_value(const ModelParams& params, int n);

// The same function as an explicit combination sum_{j,k} Q_jk h_jk(z) of
// theta quotients, for arbitrary real z (doubly periodic, constant).
double f_tilde(const ModelParams& params, double z);

struct ResidueTriple {
    double q7, q8, q9;
};

// The three residue-cancellation sums; exact values are 0.
ResidueTriple residue_identities(const ModelParams& params, double z);

} // namespace sixv

#endif
