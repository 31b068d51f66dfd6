#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sixv/selftest.hpp"
#include "sixv/theta.hpp"

using namespace sixv;

TEST_CASE("zeros of theta1 and theta2") {
    Nome nome = Nome::from_q(0.5);
    CHECK(std::fabs(theta(1, 0.0, nome)) < 1e-15);
    CHECK(std::fabs(theta(2, M_PI / 2.0, nome)) < 1e-14);
}

TEST_CASE("theta3 small-q value against the direct partial sum") {
    // oracle: first terms of 1 + 2 sum q^{n^2} cos(0)
    const double q = 0.1;
    double oracle = 1.0;
    for (int n = 1; n <= 5; ++n) oracle += 2.0 * std::pow(q, double(n) * n);
    CHECK(theta(3, 0.0, Nome::from_q(q)) == doctest::Approx(oracle).epsilon(1e-15));
}

TEST_CASE("derivatives at zero") {
    Nome nome = Nome::from_q(0.23);
    CHECK(theta_deriv(2, 0.0, nome, 1) == 0.0); // even function
    CHECK(theta_deriv(4, 0.0, nome, 1) == 0.0);
    // theta1'(0) = theta2(0) theta3(0) theta4(0)
    const double lhs = theta_deriv(1, 0.0, nome, 1);
    const double rhs = theta(2, 0.0, nome) * theta(3, 0.0, nome) * theta(4, 0.0, nome);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("second derivative matches a central difference") {
    Nome nome = Nome::from_q(0.31);
    const double z = 0.47, h = 1e-5;
    for (int j = 1; j <= 4; ++j) {
        const double fd =
            (theta(j, z + h, nome) - 2.0 * theta(j, z, nome) + theta(j, z - h, nome)) /
            (h * h);
        CHECK(theta_deriv(j, z, nome, 2) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("periodicity, symmetry, and shifts at random draws") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uz(-M_PI, M_PI), uq(0.05, 0.8);
    for (int i = 0; i < 300; ++i) {
        const double z = uz(rng);
        Nome nome = Nome::from_q(uq(rng));
        const double t1 = theta(1, z, nome), t3 = theta(3, z, nome);
        CHECK(theta(1, z + M_PI, nome) == doctest::Approx(-t1).epsilon(1e-12));
        CHECK(theta(3, z + M_PI, nome) == doctest::Approx(t3).epsilon(1e-12));
        CHECK(theta(1, -z, nome) == doctest::Approx(-t1).epsilon(1e-12));
        CHECK(theta(2, -z, nome) == doctest::Approx(theta(2, z, nome)).epsilon(1e-12));
        CHECK(theta(4, -z, nome) == doctest::Approx(theta(4, z, nome)).epsilon(1e-12));
        CHECK(theta(1, z, nome) ==
              doctest::Approx(theta(2, z - M_PI / 2.0, nome)).epsilon(1e-12));
        CHECK(theta(3, z, nome) ==
              doctest::Approx(theta(4, z + M_PI / 2.0, nome)).epsilon(1e-12));
    }
}

TEST_CASE("quasi-periodicity under z -> z + pi tau via the complex path") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uz(-1.5, 1.5), uq(0.1, 0.6);
    for (int i = 0; i < 50; ++i) {
        const double x = uz(rng), q = uq(rng);
        Nome nome = Nome::from_q(q);
        const std::complex<double> z(x, 0.0);
        const std::complex<double> shift(0.0, M_PI * nome.tau_im);
        const std::complex<double> lhs = theta_c(4, z + shift, nome);
        const std::complex<double> rhs =
            -std::exp(std::complex<double>(0.0, -2.0 * x)) / q * theta_c(4, z, nome);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("big-float evaluation: periodicity at 256 bits and double agreement") {
    const long P = 256;
    BigReal q(0.37, P);
    BigReal z(0.8125, P);
    BigReal pi = BigReal::pi(P);
    for (int j = 1; j <= 4; ++j) {
        BigReal v = theta_big(j, z, q);
        BigReal shifted = theta_big(j, z + pi, q);
        BigReal expect = (j <= 2) ? -v : v;
        CHECK(BigReal::rel_diff(shifted, expect).to_double() < std::ldexp(1.0, -(256 - 8)));
        // and the double path agrees
        CHECK(v.to_double() ==
              doctest::Approx(theta(j, 0.8125, Nome::from_q(0.37))).epsilon(1e-14));
        BigReal d = theta_deriv_big(j, z, q, 1);
        CHECK(d.to_double() ==
              doctest::Approx(theta_deriv(j, 0.8125, Nome::from_q(0.37), 1))
                  .epsilon(1e-13));
    }
}

TEST_CASE("identity residual examples") {
    CHECK(identity_residual("Q11", 0.3, 0.7, Nome::from_q(0.2)) <= 1e-12);
    CHECK(identity_residual("2", 0.0, 0.0, Nome::from_q(0.3)) <= 1e-15);
    CHECK(identity_residual("Q8", 0.4, 1.1, Nome::from_q(0.15)) <= 1e-12);
    CHECK(identity_residual("main13a", 0.0, 0.0, Nome::from_q(0.44)) <= 1e-14);
}

TEST_CASE("identity error paths") {
    CHECK_THROWS_AS((void)identity_residual("nope", 0.1, 0.1, Nome::from_q(0.2)),
                    domain_error);
    // theta1(0) = 0 is a pole of the (4) rational forms
    CHECK_THROWS_AS((void)identity_residual("4a", 0.0, 0.0, Nome::from_q(0.2)),
                    pole_error);
    CHECK_THROWS_AS((void)theta(1, 0.1, Nome{1.5, 0.0}), domain_error);
    CHECK_THROWS_AS((void)theta(5, 0.1, Nome::from_q(0.2)), domain_error);
    CHECK_THROWS_AS((void)theta_deriv(1, 0.1, Nome::from_q(0.2), 3), domain_error);
    CHECK_THROWS_AS(Nome::from_gamma(-1.0), domain_error);
}

TEST_CASE("randomized identity sweep stays within tolerance") {
    auto sweep = sixv::selftest::identity_sweep(1234, 100);
    CHECK(sweep.max_residual <= 1e-12);
}
