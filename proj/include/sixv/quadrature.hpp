#ifndef SIXV_QUADRATURE_HPP
#define SIXV_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "sixv/errors.hpp"

namespace sixv {

struct QuadratureOptions {
    double tolerance = 1e-12;
    int initial_nodes = 16;
    int max_doublings = 10;
};

// Gauss-Legendre nodes/weights on [-1, 1].
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

// Fixed-order Gauss-Legendre on [a, b].
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

// Gauss-Legendre with node doubling until successive estimates differ by
// less than tol * (1 + |I|).  Throws quadrature_error on non-convergence
// or non-finite integrand sums.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

} // namespace sixv

#endif
