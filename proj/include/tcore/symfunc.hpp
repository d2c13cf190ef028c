#pragma once

#include <vector>

#include "tcore/partition.hpp"
#include "tcore/quadratic.hpp"
#include "tcore/rational.hpp"

namespace tcore {

/// The point x_i = q^{nu_i - i + 1/2}, i >= 1, for a rational q > 1 and a
/// shift partition nu (nu = empty gives q^rho). Values live in Q(q^{1/2}).
class SpecPoint {
public:
    explicit SpecPoint(const Rational& q, Partition shift = Partition());

    const Rational& q() const { return q_; }
    const Partition& shift() const { return shift_; }
    const QuadraticNumber& sqrt_q() const { return sqrt_q_; }

    /// q^{h/2}.
    QuadraticNumber half_power(long h) const;

private:
    Rational q_;
    QuadraticNumber sqrt_q_;
    Partition shift_;
};

/// p_k at the point, the infinite tail summed in closed form.
QuadraticNumber power_sum(const SpecPoint& spec, int k);

/// h_r via Newton's identities.
QuadraticNumber complete_homogeneous(const SpecPoint& spec, int r);

/// h_0 .. h_rmax.
std::vector<QuadraticNumber> complete_homogeneous_table(const SpecPoint& spec, int rmax);

/// det(h_{lambda_i - eta_j - i + j}); zero when eta is not inside lambda.
QuadraticNumber skew_schur(const Partition& lambda, const Partition& eta, const SpecPoint& spec);

inline QuadraticNumber schur(const Partition& lambda, const SpecPoint& spec)
{
    return skew_schur(lambda, Partition(), spec);
}

/// s_lambda(q^rho) = q^{-n(lambda) - |lambda|/2} prod_boxes 1/(1 - q^{-h}).
QuadraticNumber schur_hook_formula(const Partition& lambda, const Rational& q);

/// C_{lambda,mu,nu}(q) with q^{kappa/2} factors and the eta-sum restricted to
/// eta inside both lambda^t and mu.
QuadraticNumber topological_vertex(const Partition& lambda, const Partition& mu, const Partition& nu, const Rational& q);

/// Determinant by Gaussian elimination over any field type.
template <class K>
K determinant(std::vector<std::vector<K>> a)
{
    const std::size_t n = a.size();
    K det(Rational(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) {
            ++piv;
        }
        if (piv == n) {
            return K(Rational(0));
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        const K inv = inverse(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(a[r][col])) {
                continue;
            }
            const K f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    return det;
}

}  // namespace tcore
