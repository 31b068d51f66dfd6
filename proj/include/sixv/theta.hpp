#ifndef SIXV_THETA_HPP
#define SIXV_THETA_HPP

#include <complex>
#include <string>
#include <vector>

#include "sixv/bigreal.hpp"
#include "sixv/errors.hpp"

namespace sixv {

// Elliptic nome q = e^{i pi tau} with tau purely imaginary; tau_im = Im(tau).
struct Nome {
    double q;
    double tau_im;

    static Nome from_q(double q);
    // q = e^{-pi^2 / (2 gamma)}
    static Nome from_gamma(double gamma);
};

// Jacobi theta functions theta_j(z), j = 1..4, real argument.
//
//   theta_1(z) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1)z)
//   theta_2(z) = 2 sum_{n>=0}        q^{(n+1/2)^2} cos((2n+1)z)
//   theta_3(z) = 1 + 2 sum_{n>=1}        q^{n^2} cos(2nz)
//   theta_4(z) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2nz)
//
// The series is summed until the term envelope drops below the working
// epsilon times the running scale (and at least three terms are taken).
double theta(int j, double z, const Nome& nome);

// d/dz or d^2/dz^2 of theta_j, by term-wise differentiation of the series.
double theta_deriv(int j, double z, const Nome& nome, int order);

// Complex-argument evaluation of the same series.  Provided for the
// quasi-periodicity checks that shift z by pi*tau; converges for
// |Im z| < pi * tau_im.
std::complex<double> theta_c(int j, std::complex<double> z, const Nome& nome);

// Arbitrary-precision evaluation at precision min(z.precision(), q.precision()).
BigReal theta_big(int j, const BigReal& z, const BigReal& q);
BigReal theta_deriv_big(int j, const BigReal& z, const BigReal& q, int order);

// Named theta-function identities (Whittaker-Watson suite plus the
// residue-cancellation sums Q7..Q9).  identity_residual returns |LHS - RHS|
// at (z, y, q); for Q7..Q9 it returns the absolute value of the full
// left-hand sum (exact value 0), with y in the role of omega.
enum class ThetaIdentity {
    main13a,
    i4a, i4b, i4c,
    evf3a, evf3b, evf3c,
    evf2a, evf2b, evf2c,
    Q23a, Q23b, Q23c,
    dup2,
    me4,
    Q26,
    Q11,
    evf6a, evf6b, evf6c, evf6d,
    logdup8,
    Q7, Q8, Q9,
};

// Parse an identity tag such as "main13a", "4a", "evf6b", "2", "8", "Q11".
ThetaIdentity parse_identity(const std::string& tag);
const std::vector<std::pair<std::string, ThetaIdentity>>& identity_table();

double identity_residual(ThetaIdentity id, double z, double y, const Nome& nome);
double identity_residual(const std::string& tag, double z, double y, const Nome& nome);

} // namespace sixv

#endif
