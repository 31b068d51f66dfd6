#ifndef SIXV_EXACT_HPP
#define SIXV_EXACT_HPP

#include <vector>

#include "sixv/bigreal.hpp"
#include "sixv/model_params.hpp"

namespace sixv {

// Moments m_j = sum_{l in Z} l^j e^{2tl - 2 gamma |l|} of the discrete weight,
// truncated to |l| <= L with a tail below 2^-P relative to m_0.
// phi^{(k)}(t) = 2^{k+1} m_k.
struct MomentTable {
    ModelParams params;
    long precision_bits;
    long truncation;
    std::vector<BigReal> m; // m_0 .. m_max

    // Covers m_0 .. m_{max_index}.
    static MomentTable build(const ModelParams& params, int max_index, long P);

    const BigReal& operator[](int j) const { return m.at(static_cast<size_t>(j)); }
    BigReal phi(int k) const; // 2^{k+1} m_k
};

// Norms h_0..h_{n-1} as the LDL^T pivots of the Hankel matrix H_ij = m_{i+j}.
// A non-positive pivot throws precision_error (caller retries at 2P).
std::vector<BigReal> norms(const MomentTable& table, int n);

// tau_n = 2^{n^2} prod h_k (norm-product route).
BigReal tau_from_norms(const std::vector<BigReal>& h, int n, long P);

// tau_n as the Hankel determinant det(phi^{(i+j-2)}), by LU with partial
// pivoting; the cross-check route.
BigReal tau_hankel_phi(const MomentTable& table, int n);

// Hankel-type determinant with prescribed row exponents:
// det(phi^{(e_i + j - 1)})_{i,j=1..n}.  Used for exact t-derivatives of tau.
BigReal tau_det_rows(const MomentTable& table, const std::vector<int>& row_exponents);

struct ExactSolution {
    int n;
    long precision_bits;
    BigReal tau_n;
    std::vector<BigReal> h;
    BigReal Z_n;
    BigReal est_rel_err;
    int retries; // precision-ladder doublings taken
};

// Izergin-Korepin evaluation Z_n = (ab)^{n^2} tau_n / (prod j!)^2 at the
// adaptive precision ladder:  try P, validate against the 2P run (at most
// P/8 bits lost to conditioning), doubling on failure up to 4 times.
ExactSolution partition_exact(const ModelParams& params, int n, long P);

// Default ladder start, max(256, 96 n).
long default_precision(int n);

// |tau_n tau_n'' - tau_n'^2 - tau_{n+1} tau_{n-1}| / (tau_{n+1} tau_{n-1}),
// derivatives taken exactly via shifted-moment rows; exact value 0.
BigReal toda_residual(const ModelParams& params, int n, long P);

std::string to_json(const ExactSolution& sol);

} // namespace sixv

#endif
