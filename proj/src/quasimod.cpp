#include "tcore/quasimod.hpp"

#include <stdexcept>

#include "tcore/parallel.hpp"

namespace tcore {

namespace {

CSeries lift(const QSeries& s)
{
    return s.map_coeffs([](const Rational& r) { return CycloNum(r); });
}

/// Incremental row echelon form over Q(xi). Each stored row is reduced
/// against the earlier ones, so a new row is reduced by one pass in order.
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    /// Returns the reduced row; inserts it when it has a pivot among the
    /// first `cols` entries.
    std::vector<CycloNum> insert(std::vector<CycloNum> row, std::size_t cols)
    {
        reduce(row);
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_zero()) {
                const CycloNum inv = row[c].inverse();
                for (auto& x : row) {
                    x *= inv;
                }
                pivots_.push_back({c, row});
                return row;
            }
        }
        return row;
    }

    void reduce(std::vector<CycloNum>& row) const
    {
        for (const auto& [pc, prow] : pivots_) {
            if (row[pc].is_zero()) {
                continue;
            }
            const CycloNum f = row[pc];
            for (std::size_t j = 0; j < width_; ++j) {
                if (!prow[j].is_zero()) {
                    row[j] -= f * prow[j];
                }
            }
        }
    }

    std::size_t rank() const { return pivots_.size(); }

    /// Back substitution for a full-rank system whose last column is the
    /// right-hand side.
    std::vector<CycloNum> solve(std::size_t cols) const
    {
        std::vector<CycloNum> x(cols, CycloNum(0));
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const auto& [pc, prow] = *it;
            CycloNum v = prow[cols];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j != pc && !prow[j].is_zero()) {
                    v -= prow[j] * x[j];
                }
            }
            x[pc] = v;
        }
        return x;
    }

private:
    std::size_t width_;
    std::vector<std::pair<std::size_t, std::vector<CycloNum>>> pivots_;
};

}  // namespace

std::string Generator::name() const
{
    if (kind == Kind::Level) {
        return "E^" + std::to_string(a) + "_" + std::to_string(b);
    }
    return "E_" + std::to_string(b) + "(Q" + (a == 1 ? std::string() : "^" + std::to_string(a)) + ")";
}

std::string Monomial::name(const std::vector<Generator>& gens) const
{
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += gens[i].name();
        if (exponents[i] > 1) {
            out += "^" + std::to_string(exponents[i]);
        }
    }
    return out.empty() ? "1" : out;
}

WeightedBasis build_basis(int t, int W, int N, int threads)
{
    if (t < 2) {
        throw std::invalid_argument("t must be >= 2");
    }
    if (W < 0 || W > 8) {
        throw std::invalid_argument("weight bound must lie in 0..8");
    }
    if (N < 0) {
        throw std::invalid_argument("order must be >= 0");
    }
    WeightedBasis basis;
    basis.t = t;
    basis.W = W;
    basis.N = N;
    const int T = 2 * N;
    std::vector<CSeries> gen_series;
    for (int d = 1; d <= t; ++d) {
        if (t % d != 0) {
            continue;
        }
        for (int k = 1; 2 * k <= W; ++k) {
            basis.generators.push_back({Generator::Kind::Classical, d, 2 * k, 2 * k});
            gen_series.push_back(lift(eisenstein(k, (N + d - 1) / d).substitute_power(d).truncated(T)));
        }
    }
    if (W >= 1) {
        for (int r = 1; r < t; ++r) {
            auto e = level_series_all(t, r, W, N);
            for (int l = 1; l <= W; ++l) {
                basis.generators.push_back({Generator::Kind::Level, r, l, l});
                gen_series.push_back(e[static_cast<std::size_t>(l - 1)].truncated(T));
            }
        }
    }

    // exponent vectors by total weight, then lexicographically from the last generator
    const std::size_t G = basis.generators.size();
    for (int w = 0; w <= W; ++w) {
        std::vector<int> e(G, 0);
        auto rec = [&](auto&& self, std::size_t i, int left) -> void {
            if (i == G) {
                if (left == 0) {
                    basis.monomials.push_back({e, w});
                }
                return;
            }
            const int gw = basis.generators[i].weight;
            for (int k = left / gw; k >= 0; --k) {
                e[i] = k;
                self(self, i + 1, left - k * gw);
            }
            e[i] = 0;
        };
        rec(rec, 0, w);
    }

    for (const auto& g : gen_series) {
        if (!g.is_exact() && g.trunc2() < T) {
            throw std::logic_error("generator expansion shorter than the requested order");
        }
    }

    basis.expansions = std::vector<CSeries>(basis.monomials.size(), CSeries::one(T));
    // each monomial is independent work; parallel_sum merges vectors in order
    struct Acc {
        std::vector<std::pair<std::size_t, CSeries>> items;
        Acc& operator+=(const Acc& o)
        {
            items.insert(items.end(), o.items.begin(), o.items.end());
            return *this;
        }
    };
    Acc all = parallel_sum(basis.monomials.size(), threads, Acc{}, [&](std::size_t m) {
        CSeries prod = CSeries::one(T);
        const auto& ex = basis.monomials[m].exponents;
        for (std::size_t g = 0; g < G; ++g) {
            for (int k = 0; k < ex[g]; ++k) {
                prod *= gen_series[g];
            }
        }
        return Acc{{{m, prod}}};
    });
    for (auto& [m, s] : all.items) {
        basis.expansions[m] = std::move(s);
    }
    return basis;
}

std::string status_name(MembershipStatus s)
{
    switch (s) {
        case MembershipStatus::Accept:
            return "accept";
        case MembershipStatus::Reject:
            return "reject";
        case MembershipStatus::Underdetermined:
            return "underdetermined";
    }
    return "unknown";
}

MembershipResult membership_solve(const CSeries& target, const WeightedBasis& basis, int fit_N, int check_N)
{
    if (fit_N < 0 || check_N <= fit_N) {
        throw std::invalid_argument("need 0 <= fit_N < check_N");
    }
    if (check_N > basis.N || (!target.is_exact() && target.trunc2() < 2 * check_N)) {
        throw std::invalid_argument("basis or target expansion shorter than check_N");
    }
    const std::size_t M = basis.monomials.size();
    MembershipResult res;
    res.fit_N = fit_N;
    res.check_N = check_N;
    res.coeffs.assign(M, CycloNum(0));

    // drop monomials dependent on earlier ones over Q^0..Q^check_N
    std::vector<std::size_t> keep;
    {
        const auto width = static_cast<std::size_t>(check_N) + 1;
        Echelon ech(width);
        for (std::size_t m = 0; m < M; ++m) {
            std::vector<CycloNum> v(width);
            for (std::size_t i = 0; i < width; ++i) {
                v[i] = basis.expansions[m].coeff(2 * static_cast<int>(i));
            }
            const std::size_t before = ech.rank();
            ech.insert(std::move(v), width);
            if (ech.rank() == before) {
                res.dropped.push_back(m);
            } else {
                keep.push_back(m);
            }
        }
    }

    const std::size_t K = keep.size();
    Echelon rows(K + 1);
    for (int i = 0; i <= fit_N; ++i) {
        std::vector<CycloNum> row(K + 1);
        for (std::size_t j = 0; j < K; ++j) {
            row[j] = basis.expansions[keep[j]].coeff(2 * i);
        }
        row[K] = target.coeff(2 * i);
        auto reduced = rows.insert(std::move(row), K);
        bool has_pivot = false;
        for (std::size_t j = 0; j < K && !has_pivot; ++j) {
            has_pivot = !reduced[j].is_zero();
        }
        if (!has_pivot && !reduced[K].is_zero()) {
            res.status = MembershipStatus::Reject;
            res.failing_index = i;
            res.rank = static_cast<int>(rows.rank());
            return res;
        }
    }
    res.rank = static_cast<int>(rows.rank());
    if (rows.rank() < K) {
        res.status = MembershipStatus::Underdetermined;
        return res;
    }
    const auto x = rows.solve(K);
    for (std::size_t j = 0; j < K; ++j) {
        res.coeffs[keep[j]] = x[j];
    }
    for (int i = 0; i <= check_N; ++i) {
        CycloNum v = target.coeff(2 * i);
        for (std::size_t j = 0; j < K; ++j) {
            v -= x[j] * basis.expansions[keep[j]].coeff(2 * i);
        }
        if (!v.is_zero()) {
            res.status = MembershipStatus::Reject;
            res.failing_index = i;
            return res;
        }
    }
    res.status = MembershipStatus::Accept;
    return res;
}

MembershipResult membership_solve(const QSeries& target, const WeightedBasis& basis, int fit_N, int check_N)
{
    return membership_solve(lift(target), basis, fit_N, check_N);
}

bool check_2core_identity(int z_order, int q_order)
{
    if (z_order < 0 || z_order % 2 != 0 || z_order > 10) {
        throw std::invalid_argument("z_order must be even and at most 10");
    }
    if (q_order < 0) {
        throw std::invalid_argument("q_order must be >= 0");
    }
    const ZQGrid g = log_theta_ratio(2, 1, z_order, q_order);
    const int T = 2 * q_order;
    for (int k = 0; k <= z_order; ++k) {
        CSeries lhs = g.z_coefficient(k).truncated(T);
        CSeries rhs = CSeries::zero(T);
        if (k > 0 && k % 2 == 0) {
            const int h = k / 2;
            QSeries e = eisenstein(h, q_order) -
                        eisenstein(h, q_order / 2).substitute_power(2).scaled(pow(Rational(4), h));
            rhs = lift(e.scaled(Rational(2) / factorial(static_cast<unsigned>(k))).truncated(T));
        }
        if (!(lhs == rhs)) {
            return false;
        }
    }
    return true;
}

}  // namespace tcore
