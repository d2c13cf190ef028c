#pragma once

#include <vector>

#include "tcore/biseries.hpp"
#include "tcore/cyclo.hpp"
#include "tcore/series.hpp"

namespace tcore {

using CSeries = Series<CycloNum>;

/// A nonzero z together with a chosen square root.
struct ThetaArg {
    CycloNum z;
    CycloNum sqrt_z;

    /// z = root^2.
    static ThetaArg from_sqrt(const CycloNum& root);
    /// sqrt_z = r * xi_m^e, z = r^2 * xi_m^{2e}.
    static ThetaArg scaled_root(const Rational& r, int m, long e);
    /// The argument z^{-1} with sqrt (sqrt_z)^{-1}.
    ThetaArg inverse() const { return from_sqrt(sqrt_z.inverse()); }
};

/// theta(z Q^{qshift}; Q) from the product formula, truncated at Q^{trunc2/2}.
/// qshift must be -1, 0 or 1.
CSeries vartheta(const ThetaArg& arg, int trunc2, int qshift = 0);

/// sum_a z^a Q^{a^2/2 + a*qshift/2}.
CSeries theta3(const CycloNum& z, int trunc2, int qshift = 0);
/// prod (1-Q^b)(1+zQ^{b-1/2})(1+z^{-1}Q^{b-1/2}); used to cross-check theta3.
CSeries theta3_product(const CycloNum& z, int trunc2);

/// sum_a (-z)^a Q^{(a^2-a)/2}.
CSeries jacobi_j(const CycloNum& z, int trunc2);
/// prod (1-Q^b)(1-zQ^{b-1})(1-z^{-1}Q^b).
CSeries jacobi_j_product(const CycloNum& z, int trunc2);

/// prod_{b>=1} (1 - Q^b)^e for any integer e.
QSeries euler_power(int e, int trunc2);

/// M(z;q) = prod_j (1 - z q^{-j})^j as a series in z up to z^{z_order}.
QSeries macmahon_series(const Rational& q, int z_order);

/// M(z;q) with z = x^{ax2/2} y^{ay2/2}, graded by total degree.
BiSeries<Rational> macmahon(const Rational& q, int ax2, int ay2, int trunc2);

/// E_{2k}(Q) = -B_{2k}/(4k) + sum sigma_{2k-1}(n) Q^n to Q^order.
QSeries eisenstein(int k, int order);

/// Truncated expansion sum_{k<=zmax, n<=qmax} c[k][n] z^k Q^n.
class ZQGrid {
public:
    ZQGrid(int zmax, int qmax);
    static ZQGrid one(int zmax, int qmax);

    int zmax() const { return zmax_; }
    int qmax() const { return qmax_; }
    const CycloNum& at(int k, int n) const { return c_[index(k, n)]; }
    CycloNum& at(int k, int n) { return c_[index(k, n)]; }

    ZQGrid operator*(const ZQGrid& o) const;
    ZQGrid& operator+=(const ZQGrid& o);
    ZQGrid scaled(const CycloNum& c) const;
    /// log of a grid whose z^0 row is exactly 1.
    ZQGrid log_z() const;

    /// The Q-series multiplying z^k.
    CSeries z_coefficient(int k) const;

private:
    std::size_t index(int k, int n) const { return static_cast<std::size_t>(k) * static_cast<std::size_t>(qmax_ + 1) + static_cast<std::size_t>(n); }
    int zmax_;
    int qmax_;
    std::vector<CycloNum> c_;
};

/// log(theta(xi e^z)/theta(xi)) as a (z,Q) grid, xi = xi_{2t}^{2r}, with
/// square root xi_{2t}^r.
ZQGrid log_theta_ratio(int t, int r, int zmax, int qmax);

/// E^r_l(Q) = l! [z^l] log(theta(xi_t^r e^z)/theta(xi_t^r)) for l = 1..lmax,
/// coefficients in Q(xi_{2t}). Element l-1 holds E^r_l.
std::vector<CSeries> level_series_all(int t, int r, int lmax, int order);
CSeries level_series(int t, int r, int l, int order);

}  // namespace tcore
