#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sixv/exact.hpp"

using namespace sixv;

namespace {

double tol_bits(long bits) { return std::ldexp(1.0, -int(bits)); }

// Monic orthogonal polynomials over the truncated lattice by Gram-Schmidt,
// used as an independent oracle for the norms.
struct LatticeGS {
    std::vector<std::vector<BigReal>> coeff; // coeff[k][j] of l^j in P_k
    std::vector<BigReal> h;
    long L;
    long P;
    BigReal x, y; // e^{-2(gamma-t)}, e^{-2(gamma+t)}

    LatticeGS(const ModelParams& p, int n, long L_, long P_) : L(L_), P(P_),
          x(exp((BigReal(p.t, P_) - BigReal(p.gamma, P_)) * 2L)),
          y(exp(-(BigReal(p.t, P_) + BigReal(p.gamma, P_)) * 2L)) {
        // inner product <l^i, l^j> over |l| <= L
        auto mom = [&](int k) {
            BigReal s(k == 0 ? 1L : 0L, P);
            BigReal xp(1L, P), yp(1L, P);
            for (long l = 1; l <= L; ++l) {
                xp *= x;
                yp *= y;
                BigReal lp(1L, P);
                for (int i = 0; i < k; ++i) lp *= BigReal(l, P);
                s += lp * (k % 2 == 0 ? xp + yp : xp - yp);
            }
            return s;
        };
        std::vector<BigReal> m;
        for (int k = 0; k <= 2 * n; ++k) m.push_back(mom(k));
        auto inner = [&](const std::vector<BigReal>& a, const std::vector<BigReal>& b) {
            BigReal s(0L, P);
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * m[i + j];
            return s;
        };
        for (int k = 0; k <= n; ++k) {
            std::vector<BigReal> pk(size_t(k) + 1, BigReal(0L, P));
            pk[size_t(k)] = BigReal(1L, P); // monic
            for (int j = 0; j < k; ++j) {
                std::vector<BigReal> xk(size_t(k) + 1, BigReal(0L, P));
                xk[size_t(k)] = BigReal(1L, P);
                BigReal c = inner(xk, coeff[size_t(j)]) / h[size_t(j)];
                for (size_t i = 0; i < coeff[size_t(j)].size(); ++i)
                    pk[i] -= c * coeff[size_t(j)][i];
            }
            h.push_back(inner(pk, pk));
            coeff.push_back(pk);
        }
    }
};

} // namespace

TEST_CASE("moment closed forms") {
    const long P = 256;
    ModelParams p = ModelParams::create(1.3, 0.45);
    MomentTable table = MomentTable::build(p, 6, P);
    // 2 m_0 = sinh(2g)/(sinh(g-t) sinh(g+t))
    BigReal g(p.gamma, P), t(p.t, P);
    BigReal closed = sinh(g * 2L) / (sinh(g - t) * sinh(g + t));
    CHECK(BigReal::rel_diff(table[0] * 2L, closed).to_double() < tol_bits(P - 8));

    // odd moments vanish at t = 0 (exact cancellation in the summation)
    MomentTable sym = MomentTable::build(ModelParams::create(1.0, 0.0), 4, P);
    CHECK(sym[1].sign() == 0);
    CHECK(sym[3].sign() == 0);
    // m_0 = coth(1) at gamma = 1, t = 0, by the geometric closed form
    BigReal one(1L, P);
    BigReal e2 = exp(BigReal(-2L, P));
    CHECK(BigReal::rel_diff(sym[0], (one + e2) / (one - e2)).to_double() <
          tol_bits(P - 8));
}

TEST_CASE("moment domain errors") {
    CHECK_THROWS_AS(ModelParams::create(1.0, 1.2), domain_error);
    ModelParams p = ModelParams::create(1.0, 0.2);
    CHECK_THROWS_AS(MomentTable::build(p, -1, 256), domain_error);
    MomentTable t = MomentTable::build(p, 2, 256);
    CHECK_THROWS_AS((void)norms(t, 5), domain_error);
}

TEST_CASE("norms: h0, h1 closed forms and the Gram-Schmidt oracle") {
    const long P = 320;
    ModelParams p = ModelParams::create(1.0, 0.2);
    MomentTable table = MomentTable::build(p, 6, P);
    std::vector<BigReal> h = norms(table, 3);
    CHECK(BigReal::rel_diff(h[0], table[0]).to_double() < tol_bits(P - 8));
    BigReal h1 = table[2] - table[1] * table[1] / table[0];
    CHECK(BigReal::rel_diff(h[1], h1).to_double() < tol_bits(P / 2));

    LatticeGS gs(p, 3, table.truncation, P + 32);
    CHECK(BigReal::rel_diff(h[2], gs.h[2]).to_double() < tol_bits(P / 2));
}

TEST_CASE("tau: the two routes agree and match small-n closed forms") {
    const long P = 512;
    ModelParams p = ModelParams::create(1.0, 0.0);
    MomentTable table = MomentTable::build(p, 24, P);

    // tau_1 = 2 m_0 = phi(t)
    BigReal tau1 = tau_from_norms(norms(table, 1), 1, P);
    CHECK(BigReal::rel_diff(tau1, table.phi(0)).to_double() < tol_bits(P / 2));

    // tau_2 = 2^4 (m_0 m_2 - m_1^2)
    BigReal tau2 = tau_from_norms(norms(table, 2), 2, P);
    BigReal closed = (table[0] * table[2] - table[1] * table[1]) * 16L;
    CHECK(BigReal::rel_diff(tau2, closed).to_double() < tol_bits(P / 2));
    CHECK(BigReal::rel_diff(tau_hankel_phi(table, 2), closed).to_double() < tol_bits(P / 2));

    // dph15 for n <= 12, and positivity of every Hankel pivot
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ug(0.5, 2.0), uz(-0.7, 0.7);
    const double g = ug(rng);
    ModelParams pr = ModelParams::create(g, uz(rng) * g);
    MomentTable tr = MomentTable::build(pr, 22, 1024);
    std::vector<BigReal> h = norms(tr, 12);
    for (const auto& hk : h) CHECK(hk.sign() == 1);
    for (int n : {1, 4, 8, 12}) {
        BigReal a = tau_from_norms(norms(tr, n), n, 1024);
        BigReal b = tau_hankel_phi(tr, n);
        CHECK(BigReal::rel_diff(a, b).to_double() < tol_bits(512));
    }
}

TEST_CASE("partition function: anchor, symmetry, ladder stability") {
    ModelParams p = ModelParams::create(0.85, 0.3);
    ExactSolution s1 = partition_exact(p, 1, 128);
    BigReal anchor = sinh(BigReal(p.gamma, 256) * 2L);
    CHECK(BigReal::rel_diff(s1.Z_n, anchor).to_double() < tol_bits(100));

    ExactSolution s5 = partition_exact(p, 5, 256);
    ExactSolution s5r = partition_exact(p.reflected(), 5, 256);
    CHECK(BigReal::rel_diff(s5.Z_n, s5r.Z_n).to_double() < tol_bits(200));
    CHECK(s5.Z_n.sign() == 1);
    for (const auto& hk : s5.h) CHECK(hk.sign() == 1);

    // doubling-precision stability: P vs 2P agreement within 2^{-P+16}
    ExactSolution lo = partition_exact(p, 10, 256);
    ExactSolution hi = partition_exact(p, 10, 512);
    CHECK(BigReal::rel_diff(lo.Z_n, hi.Z_n).to_double() < tol_bits(256 - 16));
    CHECK(lo.est_rel_err.to_double() < tol_bits(256 - 16));
    CHECK_THROWS_AS((void)partition_exact(p, 3, 32), domain_error);
}

TEST_CASE("three-term recurrence from the factorization reproduces orthogonality") {
    const long P = 320;
    const int n = 8;
    ModelParams p = ModelParams::create(0.9, 0.25);
    MomentTable table = MomentTable::build(p, 2 * n, P);
    std::vector<BigReal> h = norms(table, n + 1);

    // b_k = h_k / h_{k-1}; a_k = <x P_k, P_k>/h_k computed on the lattice
    LatticeGS gs(p, n, table.truncation, P + 32);
    for (int k = 0; k < n; ++k)
        CHECK(BigReal::rel_diff(gs.h[size_t(k)], h[size_t(k)]).to_double() <
              tol_bits(P / 2));
    // orthogonality of the oracle polynomials against each other
    // (cross inner products relative to h_max)
    BigReal hmax = gs.h[0];
    for (const auto& hv : gs.h)
        if (hv > hmax) hmax = hv;
    auto inner = [&](int i, int j) {
        BigReal s(0L, P + 32);
        BigReal xp(1L, P + 32), yp(1L, P + 32);
        // direct lattice sum of P_i(l) P_j(l) w(l)
        auto eval = [&](const std::vector<BigReal>& c, const BigReal& l) {
            BigReal v(0L, P + 32), lp(1L, P + 32);
            for (const auto& ck : c) {
                v += ck * lp;
                lp *= l;
            }
            return v;
        };
        s += eval(gs.coeff[size_t(i)], BigReal(0L, P + 32)) *
             eval(gs.coeff[size_t(j)], BigReal(0L, P + 32));
        for (long l = 1; l <= gs.L; ++l) {
            xp *= gs.x;
            yp *= gs.y;
            s += eval(gs.coeff[size_t(i)], BigReal(l, P + 32)) *
                 eval(gs.coeff[size_t(j)], BigReal(l, P + 32)) * xp;
            s += eval(gs.coeff[size_t(i)], BigReal(-l, P + 32)) *
                 eval(gs.coeff[size_t(j)], BigReal(-l, P + 32)) * yp;
        }
        return s;
    };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < i; ++j)
            CHECK((abs(inner(i, j)) / hmax).to_double() < tol_bits(P / 2));
}

TEST_CASE("Toda equation residuals") {
    const long P = 512;
    ModelParams p = ModelParams::create(0.8, -0.2);
    CHECK(toda_residual(p, 1, P).to_double() < tol_bits(P / 2));
    CHECK(toda_residual(p, 5, P).to_double() < tol_bits(P / 2));
    CHECK(toda_residual(p.reflected(), 5, P).to_double() < tol_bits(P / 2));
}

TEST_CASE("exact solution serializes to JSON") {
    ModelParams p = ModelParams::create(1.0, 0.3);
    ExactSolution sol = partition_exact(p, 3, 128);
    std::string j = to_json(sol);
    CHECK(j.find("\"n\": 3") != std::string::npos);
    CHECK(j.find("tau_n") != std::string::npos);
    CHECK(j.find("Z_n") != std::string::npos);
    CHECK(j.find("est_rel_err") != std::string::npos);
}
