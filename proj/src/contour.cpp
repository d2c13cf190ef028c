#include "tcore/contour.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace tcore {

namespace {

BigFloat eps_for(unsigned bits) { return ldexp(BigFloat(1), -static_cast<int>(bits) - 16); }

constexpr int kMaxFactors = 1 << 20;

using GridFn = std::function<BigComplex(const std::vector<int>& k)>;
using Prepare = std::function<GridFn(int M)>;

void require_finite(const BigComplex& v, const char* what)
{
    if (!v.is_finite()) {
        throw std::domain_error(std::string("non-finite value in ") + what);
    }
}

BigComplex nonzero(const BigComplex& v, const char* what)
{
    if (v.norm() == 0) {
        throw std::domain_error(std::string("theta vanishes in a denominator (") + what + "); check the radii");
    }
    return v;
}

/// Sum of f over the M^n grid, skipping points whose indices are all even
/// when skip_even is set (those were summed at M/2).
BigComplex grid_sum(int n, int M, bool skip_even, const GridFn& f, int threads, unsigned bits)
{
    long total = 1;
    for (int j = 0; j < n; ++j) {
        total *= M;
    }
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::min<long>(total, 1L << 20))));
    std::vector<BigComplex> partial(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        PrecisionGuard guard(bits);
        const long lo = total * w / workers;
        const long hi = total * (w + 1) / workers;
        BigComplex acc(BigFloat(0), BigFloat(0));
        std::vector<int> k(static_cast<std::size_t>(n));
        for (long idx = lo; idx < hi; ++idx) {
            long rem = idx;
            bool any_odd = false;
            for (int j = n - 1; j >= 0; --j) {
                k[static_cast<std::size_t>(j)] = static_cast<int>(rem % M);
                rem /= M;
                any_odd = any_odd || (k[static_cast<std::size_t>(j)] % 2 != 0);
            }
            if (skip_even && !any_odd) {
                continue;
            }
            BigComplex v = f(k);
            require_finite(v, "the integrand");
            acc += v;
        }
        partial[static_cast<std::size_t>(w)] = acc;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    BigComplex sum(BigFloat(0), BigFloat(0));
    for (const auto& p : partial) {
        sum += p;
    }
    return sum;
}

TorusResult run_torus(int n, const Prepare& prepare, const QuadratureConfig& cfg, std::vector<BigFloat> radii)
{
    if (n < 1 || n > 3) {
        throw std::invalid_argument("torus quadrature supports 1 <= n <= 3");
    }
    if (cfg.m_start < 2 || (cfg.m_start & (cfg.m_start - 1)) != 0 || cfg.m_max < cfg.m_start) {
        throw std::invalid_argument("grid sizes must be powers of two with m_start <= m_max");
    }
    PrecisionGuard guard(cfg.precision_bits);
    const BigFloat tol = pow(BigFloat(10), -(cfg.target_digits + 5));
    TorusResult out;
    out.precision_bits = cfg.precision_bits;
    out.radii = std::move(radii);

    int M = cfg.m_start;
    BigComplex raw = grid_sum(n, M, false, prepare(M), cfg.threads, cfg.precision_bits);
    auto scale = [&](const BigComplex& r, int m) {
        BigFloat vol = pow(BigFloat(m), n);
        return BigComplex(r.real() / vol, r.imag() / vol);
    };
    BigComplex prev = scale(raw, M);
    out.value = prev;
    out.M = M;
    out.est_error = BigFloat(-1);
    while (2 * M <= cfg.m_max) {
        M *= 2;
        raw += grid_sum(n, M, true, prepare(M), cfg.threads, cfg.precision_bits);
        BigComplex cur = scale(raw, M);
        out.est_error = (cur - prev).abs();
        out.value = cur;
        out.M = M;
        if (out.est_error < tol) {
            out.converged = true;
            break;
        }
        prev = cur;
    }
    return out;
}

/// Principal square roots of -w xi_t^a for each a, and the product
/// prod_a theta(-s w xi^a)/theta(-w xi^a).
BigComplex level_factor(int t, const BigFloat& s, const BigFloat& sqrt_s, const BigComplex& w, const BigComplex& Q, unsigned bits)
{
    BigComplex num(BigFloat(1));
    BigComplex den(BigFloat(1));
    for (int a = 1; a <= t; ++a) {
        BigComplex y = -(w * BigComplex::root_of_unity(t, a));
        BigComplex ry = y.sqrt();
        num *= theta_numeric(y * s, ry * sqrt_s, Q, bits);
        den *= nonzero(theta_numeric(y, ry, Q, bits), "theta(-w xi^a)");
    }
    return num / den;
}

/// theta(s_k x/s_i) theta(x) / (theta(x/s_i) theta(s_k x)) with a common root of x.
BigComplex cross_ratio(const BigFloat& si, const BigFloat& rsi, const BigFloat& sk, const BigFloat& rsk, const BigComplex& x,
                       const BigComplex& rx, const BigComplex& Q, unsigned bits)
{
    BigComplex num = theta_numeric(x * (sk / si), rx * (rsk / rsi), Q, bits) * theta_numeric(x, rx, Q, bits);
    BigComplex den = nonzero(theta_numeric(x / BigComplex(si), rx / BigComplex(rsi), Q, bits), "theta(x/s_i)") *
                     nonzero(theta_numeric(x * sk, rx * rsk, Q, bits), "theta(s_k x)");
    return num / den;
}

template <class Entry>
BigComplex det_small(int n, Entry&& e)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    BigComplex det(BigFloat(0), BigFloat(0));
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)] ? 1 : 0;
            }
        }
        BigComplex prod(BigFloat(1));
        for (int i = 0; i < n; ++i) {
            prod *= e(i, p[static_cast<std::size_t>(i)]);
        }
        if (inv % 2 == 0) {
            det += prod;
        } else {
            det -= prod;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

std::vector<BigFloat> roots_of(const std::vector<BigFloat>& s)
{
    std::vector<BigFloat> r;
    for (const auto& x : s) {
        if (x <= 1) {
            throw std::invalid_argument("s values must be > 1");
        }
        r.push_back(sqrt(x));
    }
    return r;
}

BigFloat product(const std::vector<BigFloat>& v)
{
    BigFloat p(1);
    for (const auto& x : v) {
        p *= x;
    }
    return p;
}

BigComplex corprod_prefactor(int t, const std::vector<BigFloat>& s, const std::vector<BigFloat>& rs, const BigComplex& Q, unsigned bits)
{
    BigComplex pre(BigFloat(1));
    for (std::size_t j = 0; j < s.size(); ++j) {
        pre *= BigComplex(pow(rs[j], -t));
        pre /= nonzero(theta_numeric(BigComplex(s[j]), BigComplex(rs[j]), Q, bits), "theta(s_j)");
    }
    return pre;
}

/// 1/(Theta3(sign Q2)^{n-1} Theta3(sign Q2 / s_[n])).
BigComplex det_prefactor(int n, const BigFloat& signed_q2, const BigFloat& s_all, const BigComplex& sqrtQ, unsigned bits)
{
    BigComplex a = theta3_numeric(BigComplex(signed_q2), sqrtQ, bits);
    BigComplex b = theta3_numeric(BigComplex(signed_q2 / s_all), sqrtQ, bits);
    BigComplex den = b;
    for (int i = 1; i < n; ++i) {
        den *= a;
    }
    return nonzero(den, "Theta3 prefactor").inverse();
}

}  // namespace

std::vector<BigFloat> region_radii(const std::vector<BigFloat>& s, const BigFloat& absQ)
{
    if (absQ <= 0 || absQ >= 1) {
        throw std::invalid_argument("|Q| must lie in (0, 1)");
    }
    const int n = static_cast<int>(s.size());
    BigFloat span = -log(absQ);
    for (const auto& x : s) {
        if (x <= 1) {
            throw std::invalid_argument("s values must be > 1");
        }
        span -= log(x);
    }
    if (span <= 0) {
        throw std::invalid_argument("no admissible radii: prod s_j must be < |Q|^{-1}");
    }
    const BigFloat g = span / (n + 1);
    std::vector<BigFloat> c(static_cast<std::size_t>(n));
    BigFloat logc = g;
    for (int j = n - 1; j >= 0; --j) {
        c[static_cast<std::size_t>(j)] = exp(logc);
        logc += log(s[static_cast<std::size_t>(j)]) + g;
    }
    return c;
}

void check_region(const std::vector<BigFloat>& radii, const std::vector<BigFloat>& s, const BigFloat& absQ)
{
    const std::size_t n = s.size();
    if (radii.size() != n) {
        throw std::invalid_argument("one radius per variable is required");
    }
    BigFloat lower(1);
    for (std::size_t k = n; k-- > 0;) {
        if (!(radii[k] > lower)) {
            throw std::invalid_argument("region violated: c_" + std::to_string(k + 1) + " must exceed the previous bound");
        }
        lower = radii[k] * s[k];
    }
    if (!(lower * absQ < 1)) {
        throw std::invalid_argument("region violated: s_1 c_1 must be < |Q|^{-1}");
    }
}

BigComplex theta_numeric(const BigComplex& z, const BigComplex& root, const BigComplex& Q, unsigned bits)
{
    if (z.norm() == 0) {
        throw std::domain_error("theta argument must be nonzero");
    }
    const BigFloat eps = eps_for(bits);
    const BigComplex zinv = z.inverse();
    BigComplex num = root - root.inverse();
    BigComplex den(BigFloat(1));
    BigComplex qb = Q;
    const BigComplex one(BigFloat(1));
    for (int b = 1; b < kMaxFactors; ++b) {
        BigComplex a1 = z * qb;
        BigComplex a2 = zinv * qb;
        num *= (one - a1) * (one - a2);
        BigComplex d = one - qb;
        den *= d * d;
        if (a1.abs() < eps && a2.abs() < eps && qb.abs() < eps) {
            break;
        }
        qb *= Q;
    }
    return num / den;
}

BigComplex theta_numeric_sum(const BigComplex& z, const BigComplex& root, const BigComplex& Q, unsigned bits)
{
    const BigFloat eps = eps_for(bits);
    const BigComplex one(BigFloat(1));
    // j(z) = sum_a (-z)^a Q^{(a^2-a)/2}
    BigComplex j = one;
    for (int side = 0; side < 2; ++side) {
        const BigComplex step = side == 0 ? -z : -z.inverse();
        BigComplex term = one;
        BigComplex qpow = side == 0 ? one : Q;  // Q^{a-1} for a >= 1, Q^a for the negative side
        for (int a = 1; a < kMaxFactors; ++a) {
            term *= step * qpow;
            j += term;
            if (a > 2 && term.abs() < eps * (j.abs() + 1)) {
                break;
            }
            qpow *= Q;
        }
    }
    BigComplex eta3 = one;
    BigComplex qb = Q;
    for (int b = 1; b < kMaxFactors && qb.abs() >= eps; ++b) {
        BigComplex d = one - qb;
        eta3 *= d * d * d;
        qb *= Q;
    }
    return -(j / (root * eta3));
}

BigComplex theta3_numeric(const BigComplex& z, const BigComplex& sqrtQ, unsigned bits)
{
    if (z.norm() == 0) {
        throw std::domain_error("Theta3 argument must be nonzero");
    }
    const BigFloat eps = eps_for(bits);
    const BigComplex one(BigFloat(1));
    const BigComplex Q = sqrtQ * sqrtQ;
    BigComplex total = one;
    for (int side = 0; side < 2; ++side) {
        const BigComplex step = side == 0 ? z : z.inverse();
        BigComplex term = one;
        BigComplex qpow = sqrtQ;  // Q^{(2a+1)/2} moves a^2/2 to (a+1)^2/2
        for (int a = 0; a < kMaxFactors; ++a) {
            term *= step * qpow;
            total += term;
            if (a > 1 && term.abs() < eps * (total.abs() + 1)) {
                break;
            }
            qpow *= Q;
        }
    }
    return total;
}

TorusResult torus_extract(int n, const PointFn& f, const QuadratureConfig& cfg, const BigFloat& absQ, const std::vector<BigFloat>& s)
{
    PrecisionGuard guard(cfg.precision_bits);
    std::vector<BigFloat> radii = cfg.radii.empty() ? region_radii(s, absQ) : cfg.radii;
    if (!s.empty()) {
        check_region(radii, s, absQ);
    }
    if (static_cast<int>(radii.size()) != n) {
        throw std::invalid_argument("one radius per variable is required");
    }
    Prepare prep = [&](int M) -> GridFn {
        return [&, M](const std::vector<int>& k) {
            std::vector<BigComplex> w;
            for (int j = 0; j < n; ++j) {
                w.push_back(BigComplex::root_of_unity(M, k[static_cast<std::size_t>(j)]) * radii[static_cast<std::size_t>(j)]);
            }
            return f(w);
        };
    };
    return run_torus(n, prep, cfg, radii);
}

BigComplex eval_theta_product(int t, const std::vector<BigFloat>& s, const BigComplex& Q, const std::vector<BigComplex>& w, unsigned bits)
{
    PrecisionGuard guard(bits);
    const std::size_t n = s.size();
    const auto rs = roots_of(s);
    BigComplex v = corprod_prefactor(t, s, rs, Q, bits);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            BigComplex x = w[k] / w[i];
            v *= cross_ratio(s[i], rs[i], s[k], rs[k], x, x.sqrt(), Q, bits);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        v *= level_factor(t, s[j], rs[j], w[j], Q, bits);
    }
    return v;
}

BigComplex eval_theta3_det(int t, const std::vector<BigFloat>& s, const BigComplex& Q, const BigFloat& Q2, const std::vector<BigComplex>& w,
                      unsigned bits)
{
    PrecisionGuard guard(bits);
    const int n = static_cast<int>(s.size());
    const auto rs = roots_of(s);
    const BigComplex sqrtQ = Q.sqrt();
    std::vector<BigComplex> rw;
    for (const auto& x : w) {
        rw.push_back(x.sqrt());
    }
    BigComplex v = det_prefactor(n, -Q2, product(s), sqrtQ, bits) * BigComplex(pow(product(rs), -t));
    for (int j = 0; j < n; ++j) {
        v *= level_factor(t, s[static_cast<std::size_t>(j)], rs[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(j)], Q, bits);
    }
    v *= det_small(n, [&](int i, int j) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        BigComplex ratio = w[ui] / w[uj];
        BigComplex num = theta3_numeric(ratio.inverse() * BigComplex(-Q2 / s[ui]), sqrtQ, bits);
        BigComplex den = theta_numeric(ratio * s[ui], rw[ui] / rw[uj] * rs[ui], Q, bits);
        return num / nonzero(den, "theta(s_i w_i / w_j)");
    });
    return v;
}

BigComplex eval_bo_determinant(const std::vector<BigFloat>& s, const BigComplex& Q, const BigFloat& Q2, const std::vector<BigComplex>& w,
                               unsigned bits)
{
    PrecisionGuard guard(bits);
    const int n = static_cast<int>(s.size());
    const auto rs = roots_of(s);
    const BigComplex sqrtQ = Q.sqrt();
    std::vector<BigComplex> rw;
    for (const auto& x : w) {
        rw.push_back(x.sqrt());
    }
    BigComplex v = det_prefactor(n, Q2, product(s), sqrtQ, bits);
    v *= det_small(n, [&](int i, int j) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        BigComplex ratio = w[ui] / w[uj];
        BigComplex num = theta3_numeric(ratio.inverse() * BigComplex(Q2 / s[ui]), sqrtQ, bits);
        BigComplex den = theta_numeric(ratio * s[ui], rw[ui] / rw[uj] * rs[ui], Q, bits);
        return num / nonzero(den, "theta(s_i w_i / w_j)");
    });
    return v;
}

namespace {

struct Tables {
    // level[j][k]: prod_a theta(-s_j w xi^a)/theta(-w xi^a) at w = c_j omega^k
    std::vector<std::vector<BigComplex>> level;
    // pair[i][k][d mod M]: cross ratio at x = (c_k/c_i) omega^d
    std::vector<std::vector<std::vector<BigComplex>>> pair;
    // entry[i][j][d + M]: determinant entry at w_i/w_j = (c_i/c_j) omega^d
    std::vector<std::vector<std::vector<BigComplex>>> entry;
};

struct GridSetup {
    int t = 0;
    std::vector<BigFloat> s;
    std::vector<BigFloat> rs;
    std::vector<BigFloat> c;
    BigComplex Q;
    BigComplex sqrtQ;
    unsigned bits = 0;
};

std::vector<std::vector<BigComplex>> level_tables(const GridSetup& g, int M)
{
    std::vector<std::vector<BigComplex>> out(g.s.size());
    for (std::size_t j = 0; j < g.s.size(); ++j) {
        for (int k = 0; k < M; ++k) {
            BigComplex w = BigComplex::root_of_unity(M, k) * g.c[j];
            out[j].push_back(level_factor(g.t, g.s[j], g.rs[j], w, g.Q, g.bits));
        }
    }
    return out;
}

/// entry(i, j, d) = Theta3(sign Q2 s_i^{-1} w_j/w_i) / theta(s_i w_i/w_j), w_i/w_j = (c_i/c_j) omega^d,
/// root sqrt(s_i c_i / c_j) exp(i pi d / M).
std::vector<std::vector<std::vector<BigComplex>>> entry_tables(const GridSetup& g, const BigFloat& signed_q2, int M)
{
    const std::size_t n = g.s.size();
    std::vector<std::vector<std::vector<BigComplex>>> out(n, std::vector<std::vector<BigComplex>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const BigFloat ratio_abs = g.c[i] / g.c[j];
            const BigFloat root_abs = sqrt(ratio_abs) * g.rs[i];
            for (int d = -M; d < M; ++d) {
                BigComplex ratio = BigComplex::root_of_unity(M, d) * ratio_abs;
                BigComplex num = theta3_numeric(ratio.inverse() * BigComplex(signed_q2 / g.s[i]), g.sqrtQ, g.bits);
                BigComplex den = theta_numeric(ratio * g.s[i], BigComplex::root_of_unity(2L * M, d) * root_abs, g.Q, g.bits);
                out[i][j].push_back(num / nonzero(den, "theta(s_i w_i / w_j)"));
            }
        }
    }
    return out;
}

GridSetup make_setup(int t, const std::vector<BigFloat>& s, const BigFloat& Q, const QuadratureConfig& cfg)
{
    GridSetup g;
    g.t = t;
    g.s = s;
    g.rs = roots_of(s);
    g.c = cfg.radii.empty() ? region_radii(s, abs(Q)) : cfg.radii;
    check_region(g.c, s, abs(Q));
    g.Q = BigComplex(Q);
    g.sqrtQ = g.Q.sqrt();
    g.bits = cfg.precision_bits;
    return g;
}

}  // namespace

TorusResult extract_theta_product(int t, const std::vector<BigFloat>& s, const BigFloat& Q, const QuadratureConfig& cfg)
{
    PrecisionGuard guard(cfg.precision_bits);
    const GridSetup g = make_setup(t, s, Q, cfg);
    const int n = static_cast<int>(s.size());
    const BigComplex pre = corprod_prefactor(t, g.s, g.rs, g.Q, g.bits);
    auto tables = std::make_shared<Tables>();
    Prepare prep = [&, tables](int M) -> GridFn {
        tables->level = level_tables(g, M);
        tables->pair.assign(static_cast<std::size_t>(n), std::vector<std::vector<BigComplex>>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) {
                const auto ui = static_cast<std::size_t>(i);
                const auto uk = static_cast<std::size_t>(k);
                for (int d = 0; d < M; ++d) {
                    BigComplex x = BigComplex::root_of_unity(M, d) * (g.c[uk] / g.c[ui]);
                    tables->pair[ui][uk].push_back(cross_ratio(g.s[ui], g.rs[ui], g.s[uk], g.rs[uk], x, x.sqrt(), g.Q, g.bits));
                }
            }
        }
        const Tables* tb = tables.get();
        return [tb, n, M, &pre](const std::vector<int>& k) {
            BigComplex v = pre;
            for (int j = 0; j < n; ++j) {
                v *= tb->level[static_cast<std::size_t>(j)][static_cast<std::size_t>(k[static_cast<std::size_t>(j)])];
            }
            for (int i = 0; i < n; ++i) {
                for (int kk = i + 1; kk < n; ++kk) {
                    int d = ((k[static_cast<std::size_t>(kk)] - k[static_cast<std::size_t>(i)]) % M + M) % M;
                    v *= tb->pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(kk)][static_cast<std::size_t>(d)];
                }
            }
            return v;
        };
    };
    return run_torus(n, prep, cfg, g.c);
}

namespace {

TorusResult extract_det(int t, const std::vector<BigFloat>& s, const BigFloat& Q, const BigFloat& signed_q2, bool with_level,
                        const QuadratureConfig& cfg)
{
    PrecisionGuard guard(cfg.precision_bits);
    if (signed_q2 == 0) {
        throw std::invalid_argument("Q2 must be nonzero");
    }
    const GridSetup g = make_setup(t, s, Q, cfg);
    const int n = static_cast<int>(s.size());
    BigComplex pre = det_prefactor(n, signed_q2, product(s), g.sqrtQ, g.bits);
    if (with_level) {
        pre *= BigComplex(pow(product(g.rs), -t));
    }
    auto tables = std::make_shared<Tables>();
    Prepare prep = [&, tables](int M) -> GridFn {
        if (with_level) {
            tables->level = level_tables(g, M);
        }
        tables->entry = entry_tables(g, signed_q2, M);
        const Tables* tb = tables.get();
        return [tb, n, M, with_level, &pre](const std::vector<int>& k) {
            BigComplex v = pre;
            if (with_level) {
                for (int j = 0; j < n; ++j) {
                    v *= tb->level[static_cast<std::size_t>(j)][static_cast<std::size_t>(k[static_cast<std::size_t>(j)])];
                }
            }
            v *= det_small(n, [&](int i, int j) -> const BigComplex& {
                const int d = k[static_cast<std::size_t>(i)] - k[static_cast<std::size_t>(j)];
                return tb->entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(d + M)];
            });
            return v;
        };
    };
    return run_torus(n, prep, cfg, g.c);
}

}  // namespace

TorusResult extract_theta3_det(int t, const std::vector<BigFloat>& s, const BigFloat& Q, const BigFloat& Q2, const QuadratureConfig& cfg)
{
    return extract_det(t, s, Q, -Q2, true, cfg);
}

TorusResult extract_bo(const std::vector<BigFloat>& s, const BigFloat& Q, const BigFloat& Q2, const QuadratureConfig& cfg)
{
    return extract_det(1, s, Q, Q2, false, cfg);
}

BigComplex evaluate_series(const QSeries& f, const BigComplex& Q)
{
    return evaluate_series(f.map_coeffs([](const Rational& r) { return CycloNum(r); }), Q);
}

BigComplex evaluate_series(const CSeries& f, const BigComplex& Q)
{
    const BigComplex root = Q.sqrt();
    BigComplex total(BigFloat(0), BigFloat(0));
    BigComplex power(BigFloat(1));
    int at = 0;
    f.for_each_term([&](int e, const CycloNum& c) {
        if (e < 0) {
            throw std::invalid_argument("evaluate_series expects nonnegative exponents");
        }
        while (at < e) {
            power *= root;
            ++at;
        }
        total += BigComplex::from_cyclo(c) * power;
    });
    return total;
}

}  // namespace tcore
