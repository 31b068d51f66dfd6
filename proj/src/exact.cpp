#include "sixv/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

namespace sixv {

namespace {

// Smallest L with (J+2) L^J e^{-2dL} / (1 - e^{-2d}) < 2^-P * m0_est,
// evaluated in log space (d = gamma - |t|, J = highest moment index).
long truncation_bound(const ModelParams& p, int max_index, long P) {
    const double d = p.gamma - std::fabs(p.t);
    const double log_m0 = std::log(std::sinh(2.0 * p.gamma) / (2.0 * p.a * p.b));
    const double rhs = -static_cast<double>(P) * std::log(2.0) + log_m0;
    const double geom = -std::log1p(-std::exp(-2.0 * d));
    const double J = static_cast<double>(max_index);
    long L = std::max<long>(8, static_cast<long>(P * std::log(2.0) / (2.0 * d)));
    while (std::log(J + 2.0) + J * std::log(static_cast<double>(L)) - 2.0 * d * L + geom >=
           rhs) {
        L += std::max<long>(8, L / 8);
        if (L > 100000000L) throw precision_error("moment truncation bound exploded", P);
    }
    return L;
}

// Dense square matrix of BigReal with flat storage.
class BigMatrix {
public:
    BigMatrix(int n, long P) : n_(n), a_(size_t(n) * size_t(n), BigReal(0L, P)) {}
    BigReal& at(int i, int j) { return a_[size_t(i) * size_t(n_) + size_t(j)]; }
    const BigReal& at(int i, int j) const { return a_[size_t(i) * size_t(n_) + size_t(j)]; }
    void swap_rows(int i, int j) {
        for (int c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
    }
    int n() const { return n_; }

private:
    int n_;
    std::vector<BigReal> a_;
};

} // namespace

MomentTable MomentTable::build(const ModelParams& params, int max_index, long P) {
    if (max_index < 0) throw domain_error("moment index must be nonnegative");
    if (!(std::fabs(params.t) < params.gamma))
        throw domain_error("moment sum diverges for |t| >= gamma");
    MomentTable table{params, P, 0, {}};
    const long Pw = P + 32;
    table.truncation = truncation_bound(params, max_index, P);

    const BigReal g(params.gamma, Pw), tt(params.t, Pw);
    const BigReal x = exp((tt - g) * 2L);  // e^{-2(gamma - t)}
    const BigReal y = exp(-(tt + g) * 2L); // e^{-2(gamma + t)}

    table.m.assign(size_t(max_index) + 1, BigReal(0L, Pw));
    table.m[0] = BigReal(1L, Pw);
    BigReal xp(1L, Pw), yp(1L, Pw);
    for (long l = 1; l <= table.truncation; ++l) {
        xp *= x;
        yp *= y;
        const BigReal sum = xp + yp;  // even powers of l
        const BigReal diff = xp - yp; // odd powers
        BigReal lp(1L, Pw);
        const BigReal lb(l, Pw);
        for (int j = 0; j <= max_index; ++j) {
            table.m[size_t(j)] += lp * ((j % 2 == 0) ? sum : diff);
            if (j < max_index) lp *= lb;
        }
    }
    for (auto& mj : table.m) { // round to the stated precision
        BigReal r(P);
        mpfr_set(r.raw(), mj.raw(), MPFR_RNDN);
        mj = r;
    }
    return table;
}

BigReal MomentTable::phi(int k) const {
    return (*this)[k] * pow_int(BigReal(2L, precision_bits), k + 1);
}

std::vector<BigReal> norms(const MomentTable& table, int n) {
    if (n < 1) throw domain_error("n must be >= 1");
    if (2 * n - 2 > int(table.m.size()) - 1)
        throw domain_error("moment table too short for requested n");
    const long P = table.precision_bits;
    BigMatrix L(n, P);
    std::vector<BigReal> d(size_t(n), BigReal(0L, P));
    for (int j = 0; j < n; ++j) {
        BigReal dj = table[j + j];
        for (int k = 0; k < j; ++k) dj -= L.at(j, k) * L.at(j, k) * d[size_t(k)];
        if (!(dj.sign() > 0) || !dj.is_finite())
            throw precision_error("non-positive Hankel pivot at k=" + std::to_string(j), P);
        d[size_t(j)] = dj;
        for (int i = j + 1; i < n; ++i) {
            BigReal v = table[i + j];
            for (int k = 0; k < j; ++k) v -= L.at(i, k) * L.at(j, k) * d[size_t(k)];
            L.at(i, j) = v / dj;
        }
    }
    return d;
}

BigReal tau_from_norms(const std::vector<BigReal>& h, int n, long P) {
    BigReal tau = pow_int(BigReal(2L, P), long(n) * n);
    for (int k = 0; k < n; ++k) tau *= h[size_t(k)];
    return tau;
}

BigReal tau_det_rows(const MomentTable& table, const std::vector<int>& row_exponents) {
    const int n = int(row_exponents.size());
    const long P = table.precision_bits;
    BigMatrix A(n, P);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.at(i, j) = table.phi(row_exponents[size_t(i)] + j);
    // LU with partial pivoting
    BigReal det(1L, P);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        BigReal best = abs(A.at(c, c));
        for (int r = c + 1; r < n; ++r) {
            BigReal v = abs(A.at(r, c));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best.sign() > 0)) return BigReal(0L, P);
        if (piv != c) {
            A.swap_rows(piv, c);
            det = -det;
        }
        det *= A.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            BigReal f = A.at(r, c) / A.at(c, c);
            for (int j = c; j < n; ++j) A.at(r, j) -= f * A.at(c, j);
        }
    }
    return det;
}

BigReal tau_hankel_phi(const MomentTable& table, int n) {
    std::vector<int> exps;
    for (int i = 0; i < n; ++i) exps.push_back(i);
    return tau_det_rows(table, exps);
}

long default_precision(int n) { return std::max(256L, 96L * n); }

namespace {

struct SingleRun {
    BigReal tau;
    std::vector<BigReal> h;
    BigReal Z;
};

SingleRun run_once(const ModelParams& params, int n, long P) {
    MomentTable table = MomentTable::build(params, std::max(0, 2 * n - 2), P);
    SingleRun r{BigReal(P), {}, BigReal(P)};
    r.h = norms(table, n);
    r.tau = tau_from_norms(r.h, n, P);
    const BigReal g(params.gamma, P), tt(params.t, P);
    const BigReal ab = sinh(g - tt) * sinh(g + tt);
    BigReal fact(1L, P);
    for (int j = 1; j < n; ++j) fact *= BigReal::factorial(unsigned(j), P);
    r.Z = pow_int(ab, long(n) * n) * r.tau / (fact * fact);
    return r;
}

} // namespace

ExactSolution partition_exact(const ModelParams& params, int n, long P) {
    if (n < 1) throw domain_error("n must be >= 1");
    if (P < BigReal::min_precision) throw domain_error("precision must be >= 64 bits");
    const int max_retries = 4;
    long Pc = P;
    for (int attempt = 0; attempt <= max_retries; ++attempt, Pc *= 2) {
        try {
            SingleRun lo = run_once(params, n, Pc);
            SingleRun hi = run_once(params, n, 2 * Pc);
            BigReal est = BigReal::rel_diff(lo.Z, hi.Z);
            // accept when at most P/8 bits were lost to Hankel conditioning
            BigReal thr(0L, 64);
            mpfr_set_ui_2exp(thr.raw(), 1, mpfr_exp_t(-(7 * Pc / 8)), MPFR_RNDN);
            if (est < thr) return ExactSolution{n, 2 * Pc, hi.tau, hi.h, hi.Z, est, attempt};
        } catch (const precision_error&) {
            // retry on the next rung
        }
    }
    throw precision_error("precision ladder exhausted", Pc / 2);
}

BigReal toda_residual(const ModelParams& params, int n, long P) {
    if (n < 1) throw domain_error("n must be >= 1");
    MomentTable table = MomentTable::build(params, 2 * n, P);
    auto seq = [](int from, int to) {
        std::vector<int> v;
        for (int i = from; i <= to; ++i) v.push_back(i);
        return v;
    };
    BigReal tau_n = tau_det_rows(table, seq(0, n - 1));
    BigReal tau_np = tau_det_rows(table, seq(0, n));
    BigReal tau_nm = (n == 1) ? BigReal(1L, P) : tau_det_rows(table, seq(0, n - 2));
    // d/dt shifts the last row; lower-row shifts duplicate a neighbor and drop out
    std::vector<int> e1 = seq(0, n - 2);
    e1.push_back(n);
    BigReal tau_d1 = tau_det_rows(table, e1);
    std::vector<int> e2 = seq(0, n - 2);
    e2.push_back(n + 1);
    BigReal tau_d2 = tau_det_rows(table, e2);
    if (n >= 2) {
        std::vector<int> e3 = seq(0, n - 3);
        e3.push_back(n - 1);
        e3.push_back(n);
        tau_d2 += tau_det_rows(table, e3);
    }
    BigReal rhs = tau_np * tau_nm;
    return abs(tau_n * tau_d2 - tau_d1 * tau_d1 - rhs) / rhs;
}

std::string to_json(const ExactSolution& sol) {
    nlohmann::json j;
    j["n"] = sol.n;
    j["precision_bits"] = sol.precision_bits;
    j["tau_n"] = sol.tau_n.to_string();
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& hk : sol.h) hs.push_back(hk.to_string());
    j["h"] = hs;
    j["Z_n"] = sol.Z_n.to_string();
    j["est_rel_err"] = sol.est_rel_err.to_string();
    return j.dump(2);
}

} // namespace sixv
