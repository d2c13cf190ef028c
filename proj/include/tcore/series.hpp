#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcore/rational.hpp"

namespace tcore {

/// A half-integer exponent, stored doubled.
struct HalfExp {
    int twice_value = 0;

    static constexpr HalfExp integer(int v) { return HalfExp{2 * v}; }
    constexpr HalfExp operator+(HalfExp o) const { return HalfExp{twice_value + o.twice_value}; }
    constexpr HalfExp operator-(HalfExp o) const { return HalfExp{twice_value - o.twice_value}; }
    constexpr auto operator<=>(const HalfExp&) const = default;
};

/// Truncated formal Laurent series in one variable x with half-integer
/// exponents, coefficients in K. Exponents are stored doubled; a series knows
/// its coefficients for every exponent <= trunc2() (doubled), and holds no
/// term above it. The sentinel kExact marks a polynomial known exactly.
///
/// K must be a commutative ring with unit that is constructible from Rational
/// and provides is_zero(K) and, for division, inverse(K).
template <class K>
class Series {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    /// The exact zero.
    Series() = default;

    /// The exact constant c.
    explicit Series(K c)
    {
        if (!is_zero(c)) {
            lo2_ = 0;
            c_.push_back(std::move(c));
        }
    }
    explicit Series(const Rational& r) requires(!std::is_same_v<K, Rational>) : Series(K(r)) {}

    static Series zero(int trunc2)
    {
        Series s;
        s.trunc2_ = trunc2;
        return s;
    }
    static Series one(int trunc2) { return monomial(K(Rational(1)), 0, trunc2); }
    static Series monomial(K c, int exp2, int trunc2)
    {
        Series s = zero(trunc2);
        s.add_term(exp2, std::move(c));
        return s;
    }

    int trunc2() const { return trunc2_; }
    bool is_exact() const { return trunc2_ >= kExact; }
    bool is_zero_series() const { return c_.empty(); }

    /// Lowest exponent (doubled) with a nonzero coefficient.
    std::optional<int> low2() const
    {
        if (c_.empty()) {
            return std::nullopt;
        }
        return lo2_;
    }
    /// Highest stored exponent (doubled).
    std::optional<int> high2() const
    {
        if (c_.empty()) {
            return std::nullopt;
        }
        return lo2_ + static_cast<int>(c_.size()) - 1;
    }

    K coeff(int exp2) const
    {
        if (c_.empty() || exp2 < lo2_ || exp2 >= lo2_ + static_cast<int>(c_.size())) {
            return K(Rational(0));
        }
        return c_[static_cast<std::size_t>(exp2 - lo2_)];
    }
    K coeff(HalfExp e) const { return coeff(e.twice_value); }

    /// Adds c to the coefficient of x^{exp2/2}; ignored above the truncation.
    void add_term(int exp2, const K& c)
    {
        if (exp2 > trunc2_ || is_zero(c)) {
            return;
        }
        slot(exp2) += c;
        normalize();
    }
    void set_term(int exp2, const K& c)
    {
        if (exp2 > trunc2_) {
            return;
        }
        if (c_.empty() && is_zero(c)) {
            return;
        }
        slot(exp2) = c;
        normalize();
    }

    /// Visits nonzero terms in increasing exponent order.
    template <class F>
    void for_each_term(F&& f) const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!is_zero(c_[i])) {
                f(lo2_ + static_cast<int>(i), c_[i]);
            }
        }
    }

    std::vector<std::pair<int, K>> terms() const
    {
        std::vector<std::pair<int, K>> out;
        for_each_term([&](int e, const K& c) { out.emplace_back(e, c); });
        return out;
    }

    Series truncated(int trunc2) const
    {
        Series out = *this;
        out.trunc2_ = std::min(trunc2_, trunc2);
        if (!out.c_.empty()) {
            int keep = out.trunc2_ - out.lo2_ + 1;
            if (keep <= 0) {
                out.c_.clear();
            } else if (keep < static_cast<int>(out.c_.size())) {
                out.c_.resize(static_cast<std::size_t>(keep));
            }
        }
        out.normalize();
        return out;
    }

    /// Multiplies by x^{exp2/2}.
    Series shifted(int exp2) const
    {
        Series out = *this;
        out.lo2_ += exp2;
        if (!is_exact()) {
            out.trunc2_ += exp2;
        }
        return out;
    }

    /// Substitutes x -> x^d for a positive integer d.
    Series substitute_power(int d) const
    {
        if (d <= 0) {
            throw std::invalid_argument("substitute_power needs d > 0");
        }
        Series out = zero(is_exact() ? kExact : trunc2_ * d);
        for_each_term([&](int e, const K& c) { out.add_term(e * d, c); });
        return out;
    }

    template <class F>
    auto map_coeffs(F&& f) const -> Series<std::invoke_result_t<F, const K&>>
    {
        using R = std::invoke_result_t<F, const K&>;
        Series<R> out = Series<R>::zero(trunc2_);
        for_each_term([&](int e, const K& c) { out.add_term(e, f(c)); });
        return out;
    }

    Series& operator+=(const Series& o)
    {
        trunc2_ = std::min(trunc2_, o.trunc2_);
        *this = truncated(trunc2_);
        o.for_each_term([&](int e, const K& c) {
            if (e <= trunc2_) {
                slot(e) += c;
            }
        });
        normalize();
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        trunc2_ = std::min(trunc2_, o.trunc2_);
        *this = truncated(trunc2_);
        o.for_each_term([&](int e, const K& c) {
            if (e <= trunc2_) {
                slot(e) -= c;
            }
        });
        normalize();
        return *this;
    }
    Series operator-() const
    {
        Series out = *this;
        for (auto& x : out.c_) {
            x = -x;
        }
        return out;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b)
    {
        int t = product_trunc(a, b);
        Series out = zero(t);
        if (a.c_.empty() || b.c_.empty()) {
            return out;
        }
        const int lo = a.lo2_ + b.lo2_;
        if (lo > t) {
            return out;
        }
        int hi = std::min(t, a.lo2_ + b.lo2_ + static_cast<int>(a.c_.size() + b.c_.size()) - 2);
        out.lo2_ = lo;
        out.c_.assign(static_cast<std::size_t>(hi - lo + 1), K(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) {
                continue;
            }
            const int room = hi - lo - static_cast<int>(i);
            if (room < 0) {
                break;
            }
            const std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(room) + 1);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (!is_zero(b.c_[j])) {
                    out.c_[i + j] += a.c_[i] * b.c_[j];
                }
            }
        }
        out.normalize();
        return out;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Coefficientwise scaling.
    Series scaled(const K& k) const
    {
        if (is_zero(k)) {
            return zero(trunc2_);
        }
        Series out = *this;
        for (auto& x : out.c_) {
            x = x * k;
        }
        out.normalize();
        return out;
    }

    /// Same truncation and same terms.
    friend bool operator==(const Series& a, const Series& b)
    {
        if (a.trunc2_ != b.trunc2_) {
            return false;
        }
        return a.agrees_with(b, a.trunc2_);
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Terms agree for every exponent <= limit2.
    bool agrees_with(const Series& b, int limit2) const
    {
        auto check = [&](int e) { return e > limit2 || coeff(e) == b.coeff(e); };
        bool ok = true;
        for_each_term([&](int e, const K&) { ok = ok && check(e); });
        b.for_each_term([&](int e, const K&) { ok = ok && check(e); });
        return ok;
    }

    static int product_trunc(const Series& a, const Series& b)
    {
        int t = std::min(a.trunc2_, b.trunc2_);
        if (a.c_.empty() || b.c_.empty()) {
            // zero times anything is zero to the other's precision
            if (a.c_.empty() && !b.c_.empty() && !a.is_exact()) {
                return std::min(kExact, a.trunc2_ + b.lo2_);
            }
            if (b.c_.empty() && !a.c_.empty() && !b.is_exact()) {
                return std::min(kExact, b.trunc2_ + a.lo2_);
            }
            return t;
        }
        if (!a.is_exact()) {
            t = std::min(t, a.trunc2_ + b.lo2_);
        }
        if (!b.is_exact()) {
            t = std::min(t, b.trunc2_ + a.lo2_);
        }
        return t;
    }

private:
    K& slot(int exp2)
    {
        if (c_.empty()) {
            lo2_ = exp2;
            c_.push_back(K(Rational(0)));
            return c_[0];
        }
        if (exp2 < lo2_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo2_ - exp2), K(Rational(0)));
            lo2_ = exp2;
        } else if (exp2 >= lo2_ + static_cast<int>(c_.size())) {
            c_.resize(static_cast<std::size_t>(exp2 - lo2_ + 1), K(Rational(0)));
        }
        return c_[static_cast<std::size_t>(exp2 - lo2_)];
    }

    void normalize()
    {
        while (!c_.empty() && is_zero(c_.back())) {
            c_.pop_back();
        }
        std::size_t lead = 0;
        while (lead < c_.size() && is_zero(c_[lead])) {
            ++lead;
        }
        if (lead == c_.size()) {
            c_.clear();
            lo2_ = 0;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            lo2_ += static_cast<int>(lead);
        }
    }

    int lo2_ = 0;
    int trunc2_ = kExact;
    std::vector<K> c_;
};

template <class K>
bool is_zero(const Series<K>& s)
{
    return s.is_zero_series();
}

/// 1/b. The lowest coefficient of b must be invertible in K.
template <class K>
Series<K> series_inverse(const Series<K>& b)
{
    auto lo = b.low2();
    if (!lo) {
        throw std::domain_error("series division by a series that vanishes to its truncation order");
    }
    const int lb = *lo;
    // b = x^{lb} * u, u = u0 + ... known to relative order R.
    const int rel = b.is_exact() ? Series<K>::kExact : b.trunc2() - lb;
    if (rel >= Series<K>::kExact) {
        throw std::domain_error("inverse of an exact series needs an explicit truncation");
    }
    const K u0_inv = inverse(b.coeff(lb));
    std::vector<K> u(static_cast<std::size_t>(rel) + 1, K(Rational(0)));
    for (int i = 0; i <= rel; ++i) {
        u[static_cast<std::size_t>(i)] = b.coeff(lb + i);
    }
    std::vector<K> v(static_cast<std::size_t>(rel) + 1, K(Rational(0)));
    v[0] = u0_inv;
    for (int k = 1; k <= rel; ++k) {
        K acc(Rational(0));
        for (int i = 1; i <= k; ++i) {
            if (!is_zero(u[static_cast<std::size_t>(i)]) && !is_zero(v[static_cast<std::size_t>(k - i)])) {
                acc += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(k - i)];
            }
        }
        if (!is_zero(acc)) {
            v[static_cast<std::size_t>(k)] = -(acc * u0_inv);
        }
    }
    Series<K> out = Series<K>::zero(rel - lb);
    for (int k = 0; k <= rel; ++k) {
        out.add_term(k - lb, v[static_cast<std::size_t>(k)]);
    }
    return out;
}

/// a/b; the result is valid to min(trunc(a) - low(b), trunc(b) - 2 low(b) + low(a)),
/// never beyond the common truncation order.
template <class K>
Series<K> series_div(const Series<K>& a, const Series<K>& b)
{
    auto lb = b.low2();
    if (!lb) {
        throw std::domain_error("series division by a series that vanishes to its truncation order");
    }
    Series<K> bb = b;
    if (b.is_exact()) {
        if (a.is_exact()) {
            throw std::domain_error("exact/exact division needs a truncation");
        }
        bb = b.truncated(a.trunc2() + *lb - a.low2().value_or(*lb));
    }
    Series<K> q = a * series_inverse(bb);
    int cap = std::min(a.trunc2(), b.trunc2());
    return q.truncated(cap);
}

/// log(a) for a with constant term 1 and no negative exponents.
template <class K>
Series<K> series_log(const Series<K>& a)
{
    if (a.is_exact()) {
        throw std::domain_error("series_log needs a truncated series");
    }
    if (auto lo = a.low2(); !lo || *lo < 0 || !is_zero(a.coeff(0) - K(Rational(1)))) {
        throw std::domain_error("series_log requires constant term 1");
    }
    Series<K> u = a - Series<K>::one(a.trunc2());
    Series<K> out = Series<K>::zero(a.trunc2());
    if (u.is_zero_series()) {
        return out;
    }
    Series<K> power = u;
    for (int k = 1; !power.is_zero_series(); ++k) {
        Rational c(k % 2 == 1 ? 1 : -1, k);
        out += power.scaled(K(c));
        power = power * u;
    }
    return out;
}

/// exp(a) for a with zero constant term and no negative exponents.
template <class K>
Series<K> series_exp(const Series<K>& a)
{
    if (a.is_exact()) {
        throw std::domain_error("series_exp needs a truncated series");
    }
    if (auto lo = a.low2(); lo && *lo <= 0) {
        throw std::domain_error("series_exp requires zero constant term");
    }
    Series<K> out = Series<K>::one(a.trunc2());
    Series<K> power = Series<K>::one(a.trunc2());
    for (int k = 1;; ++k) {
        power = (power * a).scaled(K(Rational(1, k)));
        if (power.is_zero_series()) {
            break;
        }
        out += power;
    }
    return out;
}

/// a^e for a nonnegative integer e (negative e through series_inverse).
template <class K>
Series<K> series_pow(const Series<K>& a, long e)
{
    if (e < 0) {
        return series_pow(series_inverse(a), -e);
    }
    Series<K> result = Series<K>::one(a.trunc2());
    Series<K> base = a;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

using QSeries = Series<Rational>;

}  // namespace tcore
