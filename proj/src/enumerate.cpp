#include "sixv/enumerate.hpp"

#include <cmath>

#include "sixv/errors.hpp"

namespace sixv {

namespace {

// (h_left, h_right, v_top, v_bottom) with true = R or U.
constexpr bool kEdge[7][4] = {
    {false, false, false, false}, // unused
    {true, true, true, true},     // 1: a
    {false, false, false, false}, // 2: a
    {true, true, false, false},   // 3: b
    {false, false, true, true},   // 4: b
    {true, false, true, false},   // 5: c
    {false, true, false, true},   // 6: c
};

int type_of(bool hl, bool hr, bool vt, bool vb) {
    for (int t = 1; t <= 6; ++t)
        if (kEdge[t][0] == hl && kEdge[t][1] == hr && kEdge[t][2] == vt && kEdge[t][3] == vb)
            return t;
    return 0;
}

struct Dfs {
    int n;
    VertexConfig config;
    // vrow[r] holds the vertical arrows above row r (true = up); one buffer
    // per row so backtracking never clobbers live state.
    std::vector<std::vector<bool>> vrow;
    const std::function<void(const VertexConfig&)>* visit;

    void run() {
        // top boundary arrows point down into the square
        std::fill(vrow[0].begin(), vrow[0].end(), false);
        row(0);
    }

    void row(int r) {
        if (r == n) {
            // bottom boundary arrows must point up into the square
            for (int c = 0; c < n; ++c)
                if (!vrow[size_t(r)][size_t(c)]) return;
            (*visit)(config);
            return;
        }
        site(r, 0, /*h_left=*/false); // left boundary arrow points out (left)
    }

    void site(int r, int c, bool hl) {
        if (c == n) {
            if (!hl) return; // right boundary arrow must point out (right)
            row(r + 1);
            return;
        }
        const bool vt = vrow[size_t(r)][size_t(c)];
        // ice rule: #in = (hl==R) + (vt==D) + (hr==L) + (vb==U) = 2
        const int k = 2 - (hl ? 1 : 0) - (vt ? 0 : 1);
        for (int hr_L = 0; hr_L <= 1; ++hr_L) {
            const int vb_U = k - hr_L;
            if (vb_U < 0 || vb_U > 1) continue;
            const bool hr = !hr_L;
            const bool vb = (vb_U == 1);
            config.types[size_t(r) * size_t(n) + size_t(c)] =
                std::uint8_t(type_of(hl, hr, vt, vb));
            vrow[size_t(r) + 1][size_t(c)] = vb;
            site(r, c + 1, hr);
        }
    }
};

void check_size(int n) {
    if (n < 1 || n > kMaxEnumerationSize)
        throw domain_error("enumeration size must be 1..6");
}

} // namespace

void enumerate_configs(int n, const std::function<void(const VertexConfig&)>& visit) {
    check_size(n);
    Dfs dfs{n,
            VertexConfig{n, std::vector<std::uint8_t>(size_t(n) * size_t(n), 0)},
            std::vector<std::vector<bool>>(size_t(n) + 1, std::vector<bool>(size_t(n))),
            &visit};
    dfs.run();
}

std::vector<VertexConfig> enumerate_all(int n) {
    std::vector<VertexConfig> out;
    enumerate_configs(n, [&](const VertexConfig& c) { out.push_back(c); });
    return out;
}

std::array<int, 6> vertex_census(const VertexConfig& config) {
    std::array<int, 6> counts{};
    for (std::uint8_t t : config.types) counts[size_t(t - 1)]++;
    return counts;
}

bool validate(const VertexConfig& config) {
    const int n = config.n;
    for (std::uint8_t t : config.types)
        if (t < 1 || t > 6) return false;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& e = kEdge[config.type(r, c)];
            // left boundary / neighbor consistency
            if (c == 0) {
                if (e[0]) return false; // must point left (out)
            } else if (kEdge[config.type(r, c - 1)][1] != e[0]) {
                return false;
            }
            if (c == n - 1 && !e[1]) return false; // right boundary points right
            if (r == 0) {
                if (e[2]) return false; // top boundary points down (in)
            } else if (kEdge[config.type(r - 1, c)][3] != e[2]) {
                return false;
            }
            if (r == n - 1 && !e[3]) return false; // bottom boundary points up (in)
        }
    return true;
}

BigReal brute_force_Z_weights(const BigReal& a, const BigReal& b, const BigReal& c, int n) {
    check_size(n);
    const long P = std::min(a.precision(), std::min(b.precision(), c.precision()));
    // power tables up to n^2
    std::vector<BigReal> pa, pb, pc;
    pa.reserve(size_t(n * n) + 1);
    pb.reserve(size_t(n * n) + 1);
    pc.reserve(size_t(n * n) + 1);
    pa.emplace_back(1L, P);
    pb.emplace_back(1L, P);
    pc.emplace_back(1L, P);
    for (int i = 1; i <= n * n; ++i) {
        pa.push_back(pa.back() * a);
        pb.push_back(pb.back() * b);
        pc.push_back(pc.back() * c);
    }
    BigReal total(0L, P);
    enumerate_configs(n, [&](const VertexConfig& cfg) {
        auto census = vertex_census(cfg);
        total += pa[size_t(census[0] + census[1])] * pb[size_t(census[2] + census[3])] *
                 pc[size_t(census[4] + census[5])];
    });
    return total;
}

BigReal brute_force_Z(const ModelParams& params, int n, long P) {
    const BigReal g(params.gamma, P), t(params.t, P);
    return brute_force_Z_weights(sinh(g - t), sinh(g + t), sinh(g * 2L), n);
}

} // namespace sixv
