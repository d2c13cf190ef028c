#pragma once

#include <functional>
#include <vector>

#include "tcore/bigcomplex.hpp"
#include "tcore/series.hpp"
#include "tcore/theta.hpp"

namespace tcore {

struct QuadratureConfig {
    int m_start = 16;       // first grid size, a power of two
    int m_max = 1024;       // largest grid size tried
    unsigned precision_bits = 256;
    int target_digits = 25;  // accept when doubling M moves the value by < 10^-(target_digits+5)
    std::vector<BigFloat> radii;  // c_1 > ... > c_n; empty selects region_radii
    int threads = 1;
};

struct TorusResult {
    BigComplex value;
    int M = 0;
    bool converged = false;
    BigFloat est_error;
    unsigned precision_bits = 0;
    std::vector<BigFloat> radii;
};

/// Radii with equal logarithmic gaps between consecutive terms of
/// 1 < c_n < s_n c_n < ... < c_1 < s_1 c_1 < |Q|^{-1}. Throws when the s_j do
/// not fit, i.e. prod s_j >= |Q|^{-1}.
std::vector<BigFloat> region_radii(const std::vector<BigFloat>& s, const BigFloat& absQ);
/// Throws std::invalid_argument naming the first violated inequality.
void check_region(const std::vector<BigFloat>& radii, const std::vector<BigFloat>& s, const BigFloat& absQ);

/// theta(z;Q) = root (1 - 1/z) prod (1-zQ^b)(1-z^{-1}Q^b)/(1-Q^b)^2 with
/// root^2 = z. Factors stop once they are within 2^{-bits-16} of 1.
BigComplex theta_numeric(const BigComplex& z, const BigComplex& root, const BigComplex& Q, unsigned bits);
/// Same value through -root^{-1} j(z) / prod (1-Q^b)^3.
BigComplex theta_numeric_sum(const BigComplex& z, const BigComplex& root, const BigComplex& Q, unsigned bits);
/// sum_a z^a Q^{a^2/2}, Q^{1/2} = sqrtQ.
BigComplex theta3_numeric(const BigComplex& z, const BigComplex& sqrtQ, unsigned bits);

/// Average of f over w_j = c_j exp(2 pi i k_j / M), with M doubled from
/// cfg.m_start until the value settles.
using PointFn = std::function<BigComplex(const std::vector<BigComplex>& w)>;
TorusResult torus_extract(int n, const PointFn& f, const QuadratureConfig& cfg, const BigFloat& absQ,
                          const std::vector<BigFloat>& s);

/// Full integrands (prefactors included), principal square roots.
BigComplex eval_theta_product(int t, const std::vector<BigFloat>& s, const BigComplex& Q, const std::vector<BigComplex>& w,
                      unsigned bits);
BigComplex eval_theta3_det(int t, const std::vector<BigFloat>& s, const BigComplex& Q, const BigFloat& Q2,
                      const std::vector<BigComplex>& w, unsigned bits);
BigComplex eval_bo_determinant(const std::vector<BigFloat>& s, const BigComplex& Q, const BigFloat& Q2,
                               const std::vector<BigComplex>& w, unsigned bits);

/// [w^0] of the integrands above, using tabulated factors on the grid.
TorusResult extract_theta_product(int t, const std::vector<BigFloat>& s, const BigFloat& Q, const QuadratureConfig& cfg);
TorusResult extract_theta3_det(int t, const std::vector<BigFloat>& s, const BigFloat& Q, const BigFloat& Q2,
                          const QuadratureConfig& cfg);
TorusResult extract_bo(const std::vector<BigFloat>& s, const BigFloat& Q, const BigFloat& Q2, const QuadratureConfig& cfg);

/// sum_k c_k Q^{k/2} with Q^{1/2} the principal root.
BigComplex evaluate_series(const QSeries& f, const BigComplex& Q);
BigComplex evaluate_series(const CSeries& f, const BigComplex& Q);

}  // namespace tcore
