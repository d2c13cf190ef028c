#include "tcore/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace tcore {

namespace {

CycloNum cpow(const CycloNum& z, long e)
{
    CycloNum base = e < 0 ? z.inverse() : z;
    CycloNum out = CycloNum::constant(z.conductor(), 1);
    for (long i = 0; i < std::labs(e); ++i) {
        out *= base;
    }
    return out;
}

/// s *= (1 + c Q^{exp2/2}) for exp2 > 0.
void mul_binomial(CSeries& s, const CycloNum& c, int exp2)
{
    s += s.shifted(exp2).scaled(c);
}

CSeries lift(const QSeries& s)
{
    return s.map_coeffs([](const Rational& r) { return CycloNum(r); });
}

int index_bound(int trunc2) { return static_cast<int>(std::sqrt(static_cast<double>(std::max(trunc2, 0)))) + 3; }

}  // namespace

ThetaArg ThetaArg::from_sqrt(const CycloNum& root)
{
    if (root.is_zero()) {
        throw std::domain_error("theta argument must be nonzero");
    }
    return ThetaArg{root * root, root};
}

ThetaArg ThetaArg::scaled_root(const Rational& r, int m, long e)
{
    return from_sqrt(CycloNum::root_of_unity(m, e) * CycloNum(r));
}

QSeries euler_power(int e, int trunc2)
{
    const int n = trunc2 / 2;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    c[0] = 1;
    for (int b = 1; b <= n; ++b) {
        for (int rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                for (int i = n; i >= b; --i) {
                    c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - b)];
                }
            } else {
                for (int i = b; i <= n; ++i) {
                    c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - b)];
                }
            }
        }
    }
    QSeries out = QSeries::zero(trunc2);
    for (int i = 0; i <= n; ++i) {
        out.add_term(2 * i, c[static_cast<std::size_t>(i)]);
    }
    return out;
}

CSeries vartheta(const ThetaArg& arg, int trunc2, int qshift)
{
    if (qshift < -1 || qshift > 1) {
        throw std::invalid_argument("vartheta supports Q-shifts -1, 0, 1");
    }
    if (arg.z.is_zero()) {
        throw std::domain_error("theta argument must be nonzero");
    }
    const int T = trunc2 + 2;
    const int B = T / 2 + 2;
    const CycloNum zinv = arg.z.inverse();
    CSeries num = CSeries::one(T);
    for (int b = 1; b <= B; ++b) {
        for (auto [c, e] : {std::pair{arg.z, b + qshift}, std::pair{zinv, b - qshift}}) {
            if (e == 0) {
                num = num.scaled(CycloNum(1) - c);
            } else {
                mul_binomial(num, -c, 2 * e);
            }
        }
    }
    num *= lift(euler_power(-2, T));
    CSeries pre = CSeries::monomial(arg.sqrt_z, qshift, CSeries::kExact);
    pre.add_term(-qshift, -arg.sqrt_z.inverse());
    return (pre * num).truncated(trunc2);
}

CSeries theta3(const CycloNum& z, int trunc2, int qshift)
{
    if (z.is_zero()) {
        throw std::domain_error("theta3 argument must be nonzero");
    }
    CSeries out = CSeries::zero(trunc2);
    const int A = index_bound(trunc2) + std::abs(qshift);
    const CycloNum zinv = z.inverse();
    CycloNum up = CycloNum::constant(z.conductor(), 1);
    CycloNum down = up;
    out.add_term(0, up);
    for (int a = 1; a <= A; ++a) {
        up *= z;
        down *= zinv;
        out.add_term(a * a + a * qshift, up);
        out.add_term(a * a - a * qshift, down);
    }
    return out;
}

CSeries theta3_product(const CycloNum& z, int trunc2)
{
    const CycloNum zinv = z.inverse();
    CSeries out = CSeries::one(trunc2);
    for (int b = 1; 2 * b - 1 <= trunc2; ++b) {
        mul_binomial(out, z, 2 * b - 1);
        mul_binomial(out, zinv, 2 * b - 1);
    }
    return out * lift(euler_power(1, trunc2));
}

CSeries jacobi_j(const CycloNum& z, int trunc2)
{
    CSeries out = CSeries::zero(trunc2);
    const int A = index_bound(trunc2) + 1;
    const CycloNum mz = -z;
    for (int a = -A; a <= A; ++a) {
        out.add_term(a * a - a, cpow(mz, a));
    }
    return out;
}

CSeries jacobi_j_product(const CycloNum& z, int trunc2)
{
    const CycloNum zinv = z.inverse();
    CSeries out = CSeries(CycloNum(1) - z).truncated(trunc2);
    for (int b = 1; 2 * b <= trunc2; ++b) {
        mul_binomial(out, -z, 2 * b);
        mul_binomial(out, -zinv, 2 * b);
    }
    return out * lift(euler_power(1, trunc2));
}

QSeries macmahon_series(const Rational& q, int z_order)
{
    if (q <= 1) {
        throw std::invalid_argument("MacMahon base q must be a rational > 1");
    }
    // log M = -sum_m z^m/m * x/(1-x)^2, x = q^{-m}
    QSeries lg = QSeries::zero(2 * z_order);
    for (int m = 1; m <= z_order; ++m) {
        Rational x = pow(q, -m);
        lg.add_term(2 * m, -x / ((1 - x) * (1 - x)) / m);
    }
    return series_exp(lg);
}

BiSeries<Rational> macmahon(const Rational& q, int ax2, int ay2, int trunc2)
{
    const int deg = ax2 + ay2;
    if (deg <= 0) {
        throw std::invalid_argument("MacMahon substitution needs positive degree");
    }
    return BiSeries<Rational>::substitute_monomial(macmahon_series(q, trunc2 / deg), ax2, ay2, trunc2);
}

QSeries eisenstein(int k, int order)
{
    if (k < 1) {
        throw std::invalid_argument("eisenstein index k must be >= 1");
    }
    QSeries out = QSeries::zero(2 * order);
    out.add_term(0, -bernoulli(static_cast<unsigned>(2 * k)) / (4 * k));
    for (int n = 1; n <= order; ++n) {
        BigInt sigma = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                BigInt p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(2 * k - 1));
                sigma += p;
            }
        }
        out.add_term(2 * n, Rational(sigma));
    }
    return out;
}

ZQGrid::ZQGrid(int zmax, int qmax)
    : zmax_(zmax), qmax_(qmax), c_(static_cast<std::size_t>(zmax + 1) * static_cast<std::size_t>(qmax + 1))
{
}

ZQGrid ZQGrid::one(int zmax, int qmax)
{
    ZQGrid g(zmax, qmax);
    g.at(0, 0) = CycloNum(1);
    return g;
}

ZQGrid ZQGrid::operator*(const ZQGrid& o) const
{
    ZQGrid out(std::min(zmax_, o.zmax_), std::min(qmax_, o.qmax_));
    for (int k1 = 0; k1 <= out.zmax_; ++k1) {
        for (int n1 = 0; n1 <= out.qmax_; ++n1) {
            const CycloNum& a = at(k1, n1);
            if (a.is_zero()) {
                continue;
            }
            for (int k2 = 0; k1 + k2 <= out.zmax_; ++k2) {
                for (int n2 = 0; n1 + n2 <= out.qmax_; ++n2) {
                    const CycloNum& b = o.at(k2, n2);
                    if (!b.is_zero()) {
                        out.at(k1 + k2, n1 + n2) += a * b;
                    }
                }
            }
        }
    }
    return out;
}

ZQGrid& ZQGrid::operator+=(const ZQGrid& o)
{
    if (o.zmax_ != zmax_ || o.qmax_ != qmax_) {
        throw std::invalid_argument("ZQGrid shape mismatch");
    }
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

ZQGrid ZQGrid::scaled(const CycloNum& c) const
{
    ZQGrid out = *this;
    for (auto& x : out.c_) {
        x *= c;
    }
    return out;
}

ZQGrid ZQGrid::log_z() const
{
    if (!(at(0, 0) - CycloNum(1)).is_zero()) {
        throw std::domain_error("log needs z^0 coefficient exactly 1");
    }
    for (int n = 1; n <= qmax_; ++n) {
        if (!at(0, n).is_zero()) {
            throw std::domain_error("log needs z^0 coefficient exactly 1");
        }
    }
    ZQGrid u = *this;
    u.at(0, 0) = CycloNum(0);
    ZQGrid out(zmax_, qmax_);
    ZQGrid power = u;
    for (int j = 1; j <= zmax_; ++j) {
        out += power.scaled(CycloNum(Rational(j % 2 == 1 ? 1 : -1, j)));
        power = power * u;
    }
    return out;
}

CSeries ZQGrid::z_coefficient(int k) const
{
    CSeries out = CSeries::zero(2 * qmax_);
    for (int n = 0; n <= qmax_; ++n) {
        out.add_term(2 * n, at(k, n));
    }
    return out;
}

ZQGrid log_theta_ratio(int t, int r, int zmax, int qmax)
{
    if (t < 2 || r % t == 0) {
        throw std::invalid_argument("log theta ratio needs xi_t^r != 1");
    }
    const int m = 2 * t;
    const CycloNum root = CycloNum::root_of_unity(m, r);
    const CycloNum xi = root * root;
    const CycloNum xinv = xi.inverse();

    std::vector<Rational> inv_fact(static_cast<std::size_t>(zmax) + 1);
    for (int k = 0; k <= zmax; ++k) {
        inv_fact[static_cast<std::size_t>(k)] = inverse(factorial(static_cast<unsigned>(k)));
    }

    // prefactor (root e^{z/2} - root^{-1} e^{-z/2}) / (root - root^{-1})
    ZQGrid ratio(zmax, qmax);
    const CycloNum rinv = root.inverse();
    const CycloNum den_inv = (root - rinv).inverse();
    for (int k = 0; k <= zmax; ++k) {
        Rational half = pow(Rational(1, 2), k) * inv_fact[static_cast<std::size_t>(k)];
        Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
        ratio.at(k, 0) = (root * CycloNum(half) - rinv * CycloNum(half * sign)) * den_inv;
    }

    // prod_b (1 - xi e^z Q^b)(1 - xi^{-1} e^{-z} Q^b), applied as sparse factors
    auto apply = [&](ZQGrid& g, const CycloNum& c, int dir, int b) {
        for (int n = qmax; n >= b; --n) {
            for (int k = zmax; k >= 0; --k) {
                CycloNum acc(0);
                for (int j = 0; j <= k; ++j) {
                    const CycloNum& prev = g.at(k - j, n - b);
                    if (prev.is_zero()) {
                        continue;
                    }
                    Rational w = inv_fact[static_cast<std::size_t>(j)];
                    if (dir < 0 && j % 2 == 1) {
                        w = -w;
                    }
                    acc += prev * CycloNum(w);
                }
                if (!acc.is_zero()) {
                    g.at(k, n) -= acc * c;
                }
            }
        }
    };
    CSeries base = CSeries::one(2 * qmax);
    for (int b = 1; b <= qmax; ++b) {
        apply(ratio, xi, 1, b);
        apply(ratio, xinv, -1, b);
        mul_binomial(base, -xi, 2 * b);
        mul_binomial(base, -xinv, 2 * b);
    }
    CSeries base_inv = series_inverse(base);
    ZQGrid denom(zmax, qmax);
    for (int n = 0; n <= qmax; ++n) {
        denom.at(0, n) = base_inv.coeff(2 * n);
    }
    return (ratio * denom).log_z();
}

std::vector<CSeries> level_series_all(int t, int r, int lmax, int order)
{
    ZQGrid g = log_theta_ratio(t, r, lmax, order);
    std::vector<CSeries> out;
    for (int l = 1; l <= lmax; ++l) {
        out.push_back(g.z_coefficient(l).scaled(CycloNum(factorial(static_cast<unsigned>(l)))));
    }
    return out;
}

CSeries level_series(int t, int r, int l, int order)
{
    if (l < 1) {
        throw std::invalid_argument("level series index l must be >= 1");
    }
    return level_series_all(t, r, l, order)[static_cast<std::size_t>(l - 1)];
}

}  // namespace tcore
