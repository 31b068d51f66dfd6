#include <doctest.h>

#include <cmath>
#include <random>

#include "sixv/asymptotics.hpp"
#include "sixv/theta.hpp"

using namespace sixv;

TEST_CASE("constants: symmetry, positivity, interrelations") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ug(0.3, 2.5), uz(-0.9, 0.9);
    for (int i = 0; i < 40; ++i) {
        const double g = ug(rng);
        const double t = uz(rng) * g;
        ModelParams p = ModelParams::create(g, t);
        AsymptoticConstants k = constants(p);
        AsymptoticConstants kr = constants(p.reflected());
        CHECK(k.F > 0.0);
        CHECK(k.F == doctest::Approx(kr.F).epsilon(1e-13));
        CHECK(k.F / (2.0 * p.a * p.b) == doctest::Approx(k.G).epsilon(1e-14));
        CHECK(k.A == doctest::Approx(2.0 * g * k.G).epsilon(1e-14));
        CHECK(std::exp(k.l / 2.0) == doctest::Approx(k.A / M_E).epsilon(1e-13));
    }
}

TEST_CASE("h-ratio successive-value identity") {
    ModelParams p = ModelParams::create(1.2, 0.5);
    AsymptoticConstants k = constants(p);
    const Nome nome = p.nome();
    for (int n : {1, 5, 12}) {
        const double lhs = h_ratio_asym(p, n + 1) / h_ratio_asym(p, n);
        const double rhs = k.G * k.G * theta(4, (n + 2.0) * p.omega, nome) *
                           theta(4, n * p.omega, nome) /
                           std::pow(theta(4, (n + 1.0) * p.omega, nome), 2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("t = 0 gives a period-2 theta modulation") {
    ModelParams p = ModelParams::create(1.0, 0.0);
    const Nome nome = p.nome();
    // omega = pi/2: theta4(n omega) alternates between theta4(0) and theta3(0)
    CHECK(theta(4, 2.0 * p.omega, nome) == doctest::Approx(theta(4, 0.0, nome)).epsilon(1e-13));
    CHECK(theta(4, 3.0 * p.omega, nome) == doctest::Approx(theta(3, 0.0, nome)).epsilon(1e-13));
    const double r1 = h_ratio_asym(p, 2) / h_ratio_asym(p, 4);
    const double r2 = std::pow(constants(p).G, -4.0) *
                      theta(4, 3.0 * p.omega, nome) / theta(4, 2.0 * p.omega, nome) *
                      theta(4, 4.0 * p.omega, nome) / theta(4, 5.0 * p.omega, nome);
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
}

TEST_CASE("z_asym log-domain algebra") {
    ModelParams p = ModelParams::create(0.9, -0.3);
    AsymptoticConstants k = constants(p);
    const Nome nome = p.nome();
    const double C = 1.7;
    for (int n : {2, 9}) {
        const double diff = z_asym_log(p, n + 1, C) - z_asym_log(p, n, C);
        const double expect = (2.0 * n + 1.0) * std::log(k.F) +
                              std::log(theta(4, (n + 1.0) * p.omega, nome) /
                                       theta(4, n * p.omega, nome));
        CHECK(diff == doctest::Approx(expect).epsilon(1e-10));
    }
    CHECK_THROWS_AS((void)z_asym_log(p, 3, -1.0), domain_error);
    CHECK_THROWS_AS((void)h_ratio_asym(p, 0), domain_error);
}

TEST_CASE("C estimate stabilizes") {
    ModelParams p = ModelParams::create(1.0, 0.0);
    CEstimate est = estimate_C(p, 4, 16);
    REQUIRE(est.c_n.size() == 13);
    for (const auto& [n, c] : est.c_n) CHECK(c > 0.0);
    // increments fall off roughly like 1/n
    const double early = std::fabs(est.c_n[1].second / est.c_n[0].second - 1.0);
    const double late = std::fabs(est.c_n[12].second / est.c_n[11].second - 1.0);
    CHECK(late < early);
    CHECK(late < 0.01);
}

TEST_CASE("h-ratio against the exact solver at n = 10") {
    ModelParams p = ModelParams::create(1.0, 0.3);
    ExactSolution sol = partition_exact(p, 11, default_precision(11));
    const int n = 10;
    const double log_exact =
        log(sol.h[size_t(n)]).to_double() - 2.0 * std::lgamma(double(n) + 1.0);
    const double r = std::exp(log_exact - std::log(h_ratio_asym(p, n)));
    // O(n^-2): the scaled deviation is order-1, not order-n
    CHECK(double(n) * double(n) * std::fabs(r - 1.0) < 3.0);
}

TEST_CASE("M1 entries: raw theta-quotient form equals the reduced form") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ug(0.3, 2.5), uz(-0.9, 0.9);
    std::uniform_int_distribution<int> un(1, 40);
    for (int i = 0; i < 60; ++i) {
        const double g = ug(rng);
        ModelParams p = ModelParams::create(g, uz(rng) * g);
        M1Entries m = m1_entries(p, un(rng));
        CHECK(std::fabs(m.raw12 - m.clean12) <= 1e-10 * std::max(1.0, m.clean12));
        CHECK(std::fabs(m.raw21 - m.clean21) <= 1e-10 * std::max(1.0, m.clean21));
    }
}

TEST_CASE("M1 product identity and t = 0 alternation") {
    ModelParams p = ModelParams::create(1.15, 0.42);
    const Nome nome = p.nome();
    AsymptoticConstants k = constants(p);
    const int n = 6;
    M1Entries m = m1_entries(p, n);
    const double prod = k.A * k.A * theta(4, (n + 1.0) * p.omega, nome) *
                        theta(4, (n - 1.0) * p.omega, nome) /
                        std::pow(theta(4, n * p.omega, nome), 2);
    CHECK(m.clean12 * m.clean21 == doctest::Approx(prod).epsilon(1e-12));

    ModelParams p0 = ModelParams::create(1.15, 0.0);
    const Nome nome0 = p0.nome();
    M1Entries m0 = m1_entries(p0, 8); // n even
    const double expect =
        constants(p0).A * theta(3, 0.0, nome0) / theta(4, 0.0, nome0);
    CHECK(m0.clean12 == doctest::Approx(expect).epsilon(1e-12));
}
