#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "tcore/series.hpp"

namespace tcore {

/// Truncated power series in two variables (x, y) with nonnegative
/// half-integer exponents, graded by total doubled degree e_x + e_y with one
/// shared cutoff. Used for (Q, Q1) in the q-deformed partition function.
template <class K>
class BiSeries {
public:
    using Key = std::pair<int, int>;  // doubled exponents of x and y

    explicit BiSeries(int trunc2 = 0) : trunc2_(trunc2) {}

    static BiSeries one(int trunc2)
    {
        BiSeries s(trunc2);
        s.add_term(0, 0, K(Rational(1)));
        return s;
    }
    static BiSeries monomial(K c, int ex2, int ey2, int trunc2)
    {
        BiSeries s(trunc2);
        s.add_term(ex2, ey2, std::move(c));
        return s;
    }

    int trunc2() const { return trunc2_; }
    const std::map<Key, K>& terms() const { return terms_; }

    K coeff(int ex2, int ey2) const
    {
        auto it = terms_.find({ex2, ey2});
        return it == terms_.end() ? K(Rational(0)) : it->second;
    }

    void add_term(int ex2, int ey2, const K& c)
    {
        if (ex2 < 0 || ey2 < 0) {
            throw std::invalid_argument("BiSeries exponents must be nonnegative");
        }
        if (ex2 + ey2 > trunc2_ || is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace({ex2, ey2}, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    /// Substitutes a univariate series f(z) at z = x^{ax/2} y^{ay/2}.
    static BiSeries substitute_monomial(const Series<K>& f, int ax2, int ay2, int trunc2)
    {
        if (ax2 < 0 || ay2 < 0 || ax2 + ay2 == 0) {
            throw std::invalid_argument("monomial substitution needs positive total degree");
        }
        BiSeries out(trunc2);
        f.for_each_term([&](int e2, const K& c) {
            if (e2 % 2 != 0) {
                throw std::invalid_argument("monomial substitution expects integer exponents");
            }
            const int k = e2 / 2;
            out.add_term(k * ax2, k * ay2, c);
        });
        const int deg = ax2 + ay2;
        if (!f.is_exact() && (f.trunc2() / 2 + 1) * deg <= trunc2) {
            throw std::invalid_argument("univariate truncation too low for requested total degree");
        }
        return out;
    }

    BiSeries& operator+=(const BiSeries& o)
    {
        trunc2_ = std::min(trunc2_, o.trunc2_);
        prune();
        for (const auto& [k, c] : o.terms_) {
            add_term(k.first, k.second, c);
        }
        return *this;
    }
    BiSeries& operator-=(const BiSeries& o)
    {
        trunc2_ = std::min(trunc2_, o.trunc2_);
        prune();
        for (const auto& [k, c] : o.terms_) {
            add_term(k.first, k.second, -c);
        }
        return *this;
    }
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b)
    {
        BiSeries out(std::min(a.trunc2_, b.trunc2_));
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                if (ka.first + ka.second + kb.first + kb.second <= out.trunc2_) {
                    out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
                }
            }
        }
        return out;
    }

    BiSeries scaled(const K& k) const
    {
        BiSeries out(trunc2_);
        for (const auto& [key, c] : terms_) {
            out.add_term(key.first, key.second, c * k);
        }
        return out;
    }

    /// 1/b for b with invertible constant term.
    friend BiSeries inverse(const BiSeries& b)
    {
        K c0 = b.coeff(0, 0);
        if (is_zero(c0)) {
            throw std::domain_error("BiSeries inverse needs a nonzero constant term");
        }
        K c0_inv = inverse(c0);
        BiSeries g = b.scaled(c0_inv) - one(b.trunc2_);  // positive degree
        BiSeries result = one(b.trunc2_);
        BiSeries power = one(b.trunc2_);
        for (int k = 1; k <= b.trunc2_; ++k) {
            power = power * g;
            if (power.terms_.empty()) {
                break;
            }
            if (k % 2 == 1) {
                result -= power;
            } else {
                result += power;
            }
        }
        return result.scaled(c0_inv);
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b)
    {
        return a.trunc2_ == b.trunc2_ && a.terms_ == b.terms_;
    }

    /// Sets y = 0.
    Series<K> restrict_y_zero() const
    {
        Series<K> out = Series<K>::zero(trunc2_);
        for (const auto& [k, c] : terms_) {
            if (k.second == 0) {
                out.add_term(k.first, c);
            }
        }
        return out;
    }

private:
    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.first + it->first.second > trunc2_) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
    }

    int trunc2_;
    std::map<Key, K> terms_;
};

}  // namespace tcore
