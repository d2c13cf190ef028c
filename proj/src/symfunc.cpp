#include "tcore/symfunc.hpp"

#include <stdexcept>

namespace tcore {

SpecPoint::SpecPoint(const Rational& q, Partition shift)
    : q_(q), sqrt_q_(0), shift_(std::move(shift))
{
    if (q_ <= 1) {
        throw std::invalid_argument("specialization base q must be a rational > 1");
    }
    sqrt_q_ = QuadraticNumber::sqrt_of(q_);
}

QuadraticNumber SpecPoint::half_power(long h) const
{
    if (h % 2 == 0) {
        return QuadraticNumber(pow(q_, h / 2));
    }
    return pow(sqrt_q_, h);
}

QuadraticNumber power_sum(const SpecPoint& spec, int k)
{
    if (k < 1) {
        throw std::invalid_argument("power sums start at k = 1");
    }
    const Partition& nu = spec.shift();
    const int l = nu.length();
    QuadraticNumber sum(0);
    for (int i = 1; i <= l; ++i) {
        sum += spec.half_power(static_cast<long>(k) * (2L * nu.part(i) - 2L * i + 1));
    }
    // sum_{i > l} q^{k(1/2 - i)} = q^{-k(2l+1)/2} / (1 - q^{-k})
    const Rational denom = 1 - pow(spec.q(), -k);
    sum += spec.half_power(-static_cast<long>(k) * (2L * l + 1)) * QuadraticNumber(inverse(denom));
    return sum;
}

std::vector<QuadraticNumber> complete_homogeneous_table(const SpecPoint& spec, int rmax)
{
    std::vector<QuadraticNumber> p(static_cast<std::size_t>(std::max(rmax, 0)) + 1);
    for (int k = 1; k <= rmax; ++k) {
        p[static_cast<std::size_t>(k)] = power_sum(spec, k);
    }
    std::vector<QuadraticNumber> h(static_cast<std::size_t>(std::max(rmax, 0)) + 1);
    h[0] = QuadraticNumber(1);
    for (int r = 1; r <= rmax; ++r) {
        QuadraticNumber acc(0);
        for (int i = 1; i <= r; ++i) {
            acc += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(r - i)];
        }
        h[static_cast<std::size_t>(r)] = acc * QuadraticNumber(Rational(1, r));
    }
    return h;
}

QuadraticNumber complete_homogeneous(const SpecPoint& spec, int r)
{
    if (r < 0) {
        return QuadraticNumber(0);
    }
    return complete_homogeneous_table(spec, r)[static_cast<std::size_t>(r)];
}

QuadraticNumber skew_schur(const Partition& lambda, const Partition& eta, const SpecPoint& spec)
{
    if (!lambda.contains(eta)) {
        return QuadraticNumber(0);
    }
    const int n = lambda.length();
    if (n == 0) {
        return QuadraticNumber(1);
    }
    const auto h = complete_homogeneous_table(spec, lambda.part(1) + n);
    std::vector<std::vector<QuadraticNumber>> m(static_cast<std::size_t>(n), std::vector<QuadraticNumber>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int idx = lambda.part(i) - eta.part(j) - i + j;
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                idx < 0 ? QuadraticNumber(0) : h[static_cast<std::size_t>(idx)];
        }
    }
    return determinant(std::move(m));
}

QuadraticNumber schur_hook_formula(const Partition& lambda, const Rational& q)
{
    SpecPoint spec(q);
    QuadraticNumber value = spec.half_power(-2 * lambda.n_statistic() - lambda.size());
    Rational denom(1);
    for (const auto& row : lambda.hook_lengths()) {
        for (int hk : row) {
            denom *= 1 - pow(q, -hk);
        }
    }
    return value * QuadraticNumber(inverse(denom));
}

QuadraticNumber topological_vertex(const Partition& lambda, const Partition& mu, const Partition& nu, const Rational& q)
{
    const Partition lt = lambda.conjugate();
    const Partition nt = nu.conjugate();
    const SpecPoint rho(q);
    const SpecPoint at_nu(q, nu);
    const SpecPoint at_nut(q, nt);

    QuadraticNumber eta_sum(0);
    const int eta_max = std::min(lt.size(), mu.size());
    for (int size = 0; size <= eta_max; ++size) {
        for_each_partition(size, [&](const std::vector<int>& parts) {
            Partition eta(parts);
            if (lt.contains(eta) && mu.contains(eta)) {
                eta_sum += skew_schur(lt, eta, at_nu) * skew_schur(mu, eta, at_nut);
            }
        });
    }
    return rho.half_power(lambda.kappa() + nu.kappa()) * schur(nt, rho) * eta_sum;
}

}  // namespace tcore
