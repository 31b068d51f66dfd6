#ifndef SIXV_ENUMERATE_HPP
#define SIXV_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "sixv/bigreal.hpp"
#include "sixv/model_params.hpp"

namespace sixv {

// One DWBC six-vertex configuration as an n x n matrix of vertex types 1..6.
//
// Edge convention (documented here since the figure is the only source):
// horizontal edges carry R(ight)/L(eft) arrows, vertical edges U(p)/D(own).
// A vertex reads (h_left, h_right, v_top, v_bottom); the six ice-rule states
// and their weights are
//   1: (R,R,U,U) a     2: (L,L,D,D) a
//   3: (R,R,D,D) b     4: (L,L,U,U) b
//   5: (R,L,U,D) c     6: (L,R,D,U) c
// DWBC: top/bottom boundary arrows point into the square, left/right out.
struct VertexConfig {
    int n;
    std::vector<std::uint8_t> types; // row-major, values 1..6

    std::uint8_t type(int row, int col) const { return types[size_t(row) * size_t(n) + size_t(col)]; }
};

constexpr int kMaxEnumerationSize = 6;

// Visits every valid configuration exactly once (row-wise depth-first search
// over horizontal edge states).  1 <= n <= 6.
void enumerate_configs(int n, const std::function<void(const VertexConfig&)>& visit);

std::vector<VertexConfig> enumerate_all(int n);

// Counts N_1..N_6 (index 0 = type 1).
std::array<int, 6> vertex_census(const VertexConfig& config);

// Ice-rule and boundary-condition re-verification (test support).
bool validate(const VertexConfig& config);

// Sum over configurations of a^{N1+N2} b^{N3+N4} c^{N5+N6} with the
// antiferroelectric weights of params, accumulated at precision P.
BigReal brute_force_Z(const ModelParams& params, int n, long P);

// Same sum with explicit weights (e.g. a=b=c=1 gives the ASM count).
BigReal brute_force_Z_weights(const BigReal& a, const BigReal& b, const BigReal& c, int n);

} // namespace sixv

#endif
