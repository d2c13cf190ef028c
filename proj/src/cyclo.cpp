#include "tcore/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcore {

namespace {

using IntPoly = std::vector<long>;

IntPoly poly_exact_div(IntPoly num, const IntPoly& den)
{
    // den is monic.
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) {
        throw std::logic_error("cyclotomic division underflow");
    }
    IntPoly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        long coef = num[k];
        q[k - dn] = coef;
        for (std::size_t j = 0; j <= dn; ++j) {
            num[k - dn + j] -= coef * den[j];
        }
    }
    for (long r : num) {
        if (r != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    return q;
}

struct FieldContext {
    int m = 1;
    int phi = 1;
    IntPoly cyclo;
    // red[k] = x^k mod Phi_m in the power basis.
    std::vector<std::vector<long>> red;
};

std::mutex g_ctx_mu;
std::map<int, std::unique_ptr<FieldContext>> g_ctx;

const FieldContext& context(int m)
{
    if (m < 1) {
        throw std::invalid_argument("cyclotomic conductor must be positive");
    }
    std::lock_guard<std::mutex> lock(g_ctx_mu);
    auto it = g_ctx.find(m);
    if (it != g_ctx.end()) {
        return *it->second;
    }
    auto ctx = std::make_unique<FieldContext>();
    ctx->m = m;
    ctx->phi = euler_phi(m);
    ctx->cyclo = cyclotomic_polynomial(m);
    const int phi = ctx->phi;
    const int rows = std::max(m, 2 * phi - 1);
    ctx->red.assign(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(phi), 0));
    for (int k = 0; k < rows; ++k) {
        auto& row = ctx->red[static_cast<std::size_t>(k)];
        if (k < phi) {
            row[static_cast<std::size_t>(k)] = 1;
            continue;
        }
        // x^k = x * x^{k-1}; x^phi = -sum_{i<phi} cyclo[i] x^i
        const auto& prev = ctx->red[static_cast<std::size_t>(k - 1)];
        long top = prev[static_cast<std::size_t>(phi - 1)];
        for (int i = phi - 1; i >= 1; --i) {
            row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
        }
        row[0] = 0;
        for (int i = 0; i < phi; ++i) {
            row[static_cast<std::size_t>(i)] -= top * ctx->cyclo[static_cast<std::size_t>(i)];
        }
    }
    const FieldContext& ref = *ctx;
    g_ctx.emplace(m, std::move(ctx));
    return ref;
}

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int m)
{
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

const std::vector<long>& cyclotomic_polynomial(int m)
{
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) {
            return it->second;
        }
    }
    IntPoly num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) {
            num = poly_exact_div(num, cyclotomic_polynomial(d));
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(num)).first->second;
}

CycloNum CycloNum::from_coeffs(int m, std::vector<Rational> coeffs)
{
    const auto& ctx = context(m);
    if (static_cast<int>(coeffs.size()) != ctx.phi) {
        throw std::invalid_argument("coefficient vector length must equal phi(m)");
    }
    return CycloNum(m, std::move(coeffs));
}

CycloNum CycloNum::root_of_unity(int m, long k)
{
    const auto& ctx = context(m);
    const auto& row = ctx.red[static_cast<std::size_t>(mod(k, m))];
    std::vector<Rational> c(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        c[i] = row[i];
    }
    return CycloNum(m, std::move(c));
}

CycloNum CycloNum::constant(int m, const Rational& r) { return CycloNum(r).promoted(m); }

bool CycloNum::is_zero() const
{
    for (const auto& x : c_) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

bool CycloNum::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (sgn(c_[i]) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> CycloNum::as_rational() const
{
    if (!is_rational()) {
        return std::nullopt;
    }
    return c_[0];
}

CycloNum CycloNum::promoted(int m) const
{
    if (m_ == m) {
        return *this;
    }
    if (m_ != 1) {
        throw std::invalid_argument("conductor mismatch: cannot view Q(xi_" + std::to_string(m_) + ") element in Q(xi_" +
                                    std::to_string(m) + ")");
    }
    const auto& ctx = context(m);
    std::vector<Rational> c(static_cast<std::size_t>(ctx.phi));
    c[0] = c_[0];
    return CycloNum(m, std::move(c));
}

int CycloNum::common_conductor(int a, int b)
{
    if (a == b || b == 1) {
        return a;
    }
    if (a == 1) {
        return b;
    }
    throw std::invalid_argument("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

CycloNum CycloNum::galois(long k) const
{
    if (m_ == 1) {
        return *this;
    }
    if (std::gcd(mod(k, m_), static_cast<long>(m_)) != 1) {
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    }
    const auto& ctx = context(m_);
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) {
            continue;
        }
        const auto& row = ctx.red[static_cast<std::size_t>(mod(k * static_cast<long>(i), m_))];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) {
                out[j] += c_[i] * row[j];
            }
        }
    }
    return CycloNum(m_, std::move(out));
}

CycloNum CycloNum::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero cyclotomic number");
    }
    if (m_ == 1) {
        return CycloNum(Rational(1) / c_[0]);
    }
    // a^{-1} = prod_{k != 1} sigma_k(a) / N(a), with N(a) rational.
    CycloNum adj = CycloNum::constant(m_, Rational(1));
    for (long k = 2; k < m_; ++k) {
        if (std::gcd(k, static_cast<long>(m_)) == 1) {
            adj *= galois(k);
        }
    }
    CycloNum norm = *this * adj;
    auto n = norm.as_rational();
    if (!n || sgn(*n) == 0) {
        throw std::logic_error("cyclotomic norm is not a nonzero rational");
    }
    Rational inv_n = Rational(1) / *n;
    for (auto& x : adj.c_) {
        x *= inv_n;
    }
    return adj;
}

std::complex<double> CycloNum::to_complex() const
{
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m_);
        z += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string CycloNum::to_string() const
{
    if (is_rational()) {
        return c_[0].get_str();
    }
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        os << (i ? ", " : "") << c_[i].get_str();
    }
    os << "]_" << m_;
    return os.str();
}

CycloNum& CycloNum::operator+=(const CycloNum& o)
{
    int m = common_conductor(m_, o.m_);
    if (m_ != m) {
        *this = promoted(m);
    }
    if (o.m_ == m) {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
    } else {
        c_[0] += o.c_[0];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o)
{
    int m = common_conductor(m_, o.m_);
    if (m_ != m) {
        *this = promoted(m);
    }
    if (o.m_ == m) {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
    } else {
        c_[0] -= o.c_[0];
    }
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o)
{
    if (o.m_ == 1) {
        for (auto& x : c_) {
            x *= o.c_[0];
        }
        return *this;
    }
    if (m_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& x : c_) {
            x *= s;
        }
        return *this;
    }
    common_conductor(m_, o.m_);
    const auto& ctx = context(m_);
    const std::size_t phi = c_.size();
    std::vector<Rational> prod(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(c_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < phi; ++j) {
            if (sgn(o.c_[j]) != 0) {
                prod[i + j] += c_[i] * o.c_[j];
            }
        }
    }
    for (std::size_t i = 0; i < phi; ++i) {
        c_[i] = prod[i];
    }
    for (std::size_t k = phi; k < prod.size(); ++k) {
        if (sgn(prod[k]) == 0) {
            continue;
        }
        const auto& row = ctx.red[k];
        for (std::size_t i = 0; i < phi; ++i) {
            if (row[i] != 0) {
                c_[i] += prod[k] * row[i];
            }
        }
    }
    return *this;
}

CycloNum CycloNum::operator-() const
{
    CycloNum out = *this;
    for (auto& x : out.c_) {
        x = -x;
    }
    return out;
}

bool operator==(const CycloNum& a, const CycloNum& b)
{
    if (a.m_ == b.m_) {
        return a.c_ == b.c_;
    }
    if (a.m_ == 1) {
        return b.is_rational() && b.c_[0] == a.c_[0];
    }
    if (b.m_ == 1) {
        return a.is_rational() && a.c_[0] == b.c_[0];
    }
    throw std::invalid_argument("conductor mismatch in comparison");
}

}  // namespace tcore
