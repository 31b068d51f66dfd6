#include "sixv/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace sixv {

namespace {

struct Rule {
    std::vector<double> x, w;
};

// Newton iteration on the Legendre polynomial (symmetric half only).
Rule compute_rule(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int k = 1; k <= n; ++k) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double dz = -p1 / pp;
            z += dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return r;
}

const Rule& rule(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

} // namespace

const std::vector<double>& gl_nodes(int n) { return rule(n).x; }
const std::vector<double>& gl_weights(int n) { return rule(n).w; }

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = rule(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += r.w[i] * f(c + h * r.x[i]);
    return h * sum;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (a == b) return 0.0;
    int n = opts.initial_nodes;
    double prev = gl_integrate(f, a, b, n);
    for (int k = 0; k < opts.max_doublings; ++k) {
        n *= 2;
        double cur = gl_integrate(f, a, b, n);
        if (!std::isfinite(cur)) throw quadrature_error("non-finite quadrature sum");
        if (std::fabs(cur - prev) < opts.tolerance * (1.0 + std::fabs(cur))) return cur;
        prev = cur;
    }
    throw quadrature_error("quadrature did not converge");
}

} // namespace sixv
