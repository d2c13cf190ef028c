#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tcore/series.hpp"

namespace tcore {

/// Truncated expansion in z_1..z_n where each variable has exponent >= -1,
/// with Q-series coefficients. Exponent vectors are integers (not doubled).
/// Houses F_t(Q; e^{z_1}, ..., e^{z_n}) and its correlation-function grading.
class LaurentTaylor {
public:
    using Exponents = std::vector<int>;

    LaurentTaylor(int nvars, std::vector<int> max_exp, int q_trunc2)
        : n_(nvars), max_exp_(std::move(max_exp)), q_trunc2_(q_trunc2), min_exp_(static_cast<std::size_t>(nvars), 0)
    {
        if (static_cast<int>(max_exp_.size()) != n_) {
            throw std::invalid_argument("one truncation order per variable");
        }
    }

    int nvars() const { return n_; }
    const std::vector<int>& max_exponents() const { return max_exp_; }
    /// Per-variable lowest exponent present (-1 when a pole term exists, else 0).
    const std::vector<int>& min_exponents() const { return min_exp_; }
    int q_trunc2() const { return q_trunc2_; }

    bool in_range(const Exponents& e) const
    {
        for (int i = 0; i < n_; ++i) {
            if (e[static_cast<std::size_t>(i)] < -1 || e[static_cast<std::size_t>(i)] > max_exp_[static_cast<std::size_t>(i)]) {
                return false;
            }
        }
        return true;
    }

    void add(const Exponents& e, const QSeries& s)
    {
        if (static_cast<int>(e.size()) != n_) {
            throw std::invalid_argument("exponent vector length mismatch");
        }
        if (!in_range(e)) {
            return;
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, s.truncated(q_trunc2_));
        } else {
            it->second += s;
        }
        for (int i = 0; i < n_; ++i) {
            min_exp_[static_cast<std::size_t>(i)] = std::min(min_exp_[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
        }
    }

    /// The coefficient of prod z_i^{e_i}; throws when e lies outside the computed range.
    QSeries coefficient(const Exponents& e) const
    {
        if (static_cast<int>(e.size()) != n_ || !in_range(e)) {
            throw std::out_of_range("requested exponent exceeds the computed Taylor order");
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? QSeries::zero(q_trunc2_) : it->second;
    }

    const std::map<Exponents, QSeries>& terms() const { return terms_; }

    /// Multiplies every coefficient by the same Q-series.
    LaurentTaylor times(const QSeries& f) const
    {
        LaurentTaylor out(n_, max_exp_, std::min(q_trunc2_, f.trunc2()));
        for (const auto& [e, s] : terms_) {
            out.add(e, s * f);
        }
        return out;
    }

private:
    int n_;
    std::vector<int> max_exp_;
    int q_trunc2_;
    std::vector<int> min_exp_;
    std::map<Exponents, QSeries> terms_;
};

}  // namespace tcore
