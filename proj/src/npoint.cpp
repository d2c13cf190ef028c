#include "tcore/npoint.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tcore/parallel.hpp"
#include "tcore/symfunc.hpp"

namespace tcore {

namespace {

CycloNum xi2(int t, long e) { return CycloNum::root_of_unity(2 * t, e); }

QuadraticNumber to_quadratic(const Rational& r) { return QuadraticNumber(r); }

Rational require_rational(const QuadraticNumber& x, const char* what)
{
    if (!x.is_rational()) {
        throw std::logic_error(std::string(what) + ": coefficient is not rational: " + x.to_string());
    }
    return x.rational_part();
}

BiSeries<Rational> rational_bi(const BiSeries<QuadraticNumber>& b, const char* what)
{
    BiSeries<Rational> out(b.trunc2());
    for (const auto& [k, c] : b.terms()) {
        out.add_term(k.first, k.second, require_rational(c, what));
    }
    return out;
}

/// Sum over the given partitions of Q^{|nu|} prod_j T_j(nu), divided by the
/// plain count series.
QSeries partition_average(const std::vector<std::vector<Partition>>& by_size, const std::vector<SValue>& s, int order, int threads)
{
    const int T = 2 * order;
    std::vector<const Partition*> flat;
    QSeries den = QSeries::zero(T);
    for (int k = 0; k <= order && k < static_cast<int>(by_size.size()); ++k) {
        for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
            flat.push_back(&p);
        }
        den.add_term(2 * k, Rational(static_cast<long>(by_size[static_cast<std::size_t>(k)].size())));
    }
    if (s.empty()) {
        return QSeries::one(T);
    }
    QSeries num = parallel_sum(flat.size(), threads, QSeries::zero(T), [&](std::size_t i) {
        const Partition& nu = *flat[i];
        Rational prod(1);
        for (const auto& sv : s) {
            prod *= level_sum(nu, sv);
        }
        return QSeries::monomial(prod, 2 * nu.size(), T);
    });
    return series_div(num, den);
}

std::vector<std::vector<Partition>> all_partitions(int order)
{
    std::vector<std::vector<Partition>> out;
    for (int k = 0; k <= order; ++k) {
        out.push_back(partitions_of(k));
    }
    return out;
}

struct Perm {
    std::vector<int> p;
    int sign;
};

std::vector<Perm> permutations_with_sign(int k)
{
    std::vector<Perm> out;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)] ? 1 : 0;
            }
        }
        out.push_back({p, inv % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int block_mask(const std::vector<int>& block)
{
    int m = 0;
    for (int x : block) {
        m |= 1 << (x - 1);
    }
    return m;
}

std::string mask_string(int mask)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; (1 << i) <= mask; ++i) {
        if (mask & (1 << i)) {
            out += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

/// Shared machinery of the two closed formulas. The caller supplies the
/// determinant entry for (block mask, d = l_i - l_j), the overall prefactor
/// and the per-block weight c with the k-th summand scaled by c^{k-1}.
class ClosedSum {
public:
    ClosedSum(int t, const std::vector<SValue>& s, int order) : t_(t), n_(static_cast<int>(s.size())), T_(2 * order), s_(s)
    {
        if (t < 2) {
            throw std::invalid_argument("t must be >= 2");
        }
        if (order < 0) {
            throw std::invalid_argument("order must be >= 0");
        }
        if (n_ > 8) {
            throw std::invalid_argument("at most 8 insertion points are supported");
        }
        validate_svalues(s, t);
        const int full = (1 << n_);
        prod_.assign(static_cast<std::size_t>(full), Rational(1));
        root_.assign(static_cast<std::size_t>(full), Rational(1));
        for (int m = 1; m < full; ++m) {
            for (int j = 0; j < n_; ++j) {
                if (m & (1 << j)) {
                    prod_[static_cast<std::size_t>(m)] *= s[static_cast<std::size_t>(j)].s;
                    root_[static_cast<std::size_t>(m)] *= s[static_cast<std::size_t>(j)].sqrt_s;
                }
            }
        }
    }

    int t() const { return t_; }
    int n() const { return n_; }
    int trunc2() const { return T_; }
    const Rational& s_of(int mask) const { return prod_[static_cast<std::size_t>(mask)]; }
    const Rational& sqrt_of(int mask) const { return root_[static_cast<std::size_t>(mask)]; }
    int full_mask() const { return (1 << n_) - 1; }

    /// theta(z) with sqrt(z) = root * xi_{2t}^e.
    CSeries theta(const Rational& root, long e) const { return vartheta(ThetaArg::from_sqrt(CycloNum(root) * xi2(t_, e)), T_); }

    CSeries divide(const CSeries& a, const CSeries& b, const std::string& where) const
    {
        if (b.low2() != std::optional<int>(0)) {
            throw std::domain_error("singular theta in a denominator at " + where);
        }
        return series_div(a, b);
    }

    /// 1/prod_j (s_j^{t/2} - s_j^{-t/2}).
    Rational sinh_prefactor() const
    {
        Rational den(1);
        for (const auto& sv : s_) {
            den *= pow(sv.sqrt_s, t_) - pow(sv.sqrt_s, -t_);
        }
        return inverse(den);
    }

    using EntryFn = std::function<CSeries(int mask, int d)>;

    CSeries run(const EntryFn& entry, const CSeries& prefactor, const CSeries& weight, const ClosedOptions& opt) const
    {
        if (n_ == 0) {
            return CSeries::one(T_);
        }
        // theta(xi^{a-l}) products over a != l
        std::vector<CSeries> unit_den;
        for (int l = 1; l <= t_; ++l) {
            CSeries d = CSeries::one(T_);
            for (int a = 1; a <= t_; ++a) {
                if (a != l) {
                    d *= theta(Rational(1), a - l);
                }
            }
            unit_den.push_back(d);
        }
        const auto parts = set_partitions(n_);
        std::vector<int> masks_used;
        for (const auto& sp : parts) {
            for (const auto& b : sp.blocks) {
                masks_used.push_back(block_mask(b));
            }
        }
        std::sort(masks_used.begin(), masks_used.end());
        masks_used.erase(std::unique(masks_used.begin(), masks_used.end()), masks_used.end());

        const std::size_t full = static_cast<std::size_t>(1) << n_;
        std::vector<std::vector<CSeries>> block(full);
        std::vector<std::vector<CSeries>> ent(full);
        for (int mask : masks_used) {
            auto& bl = block[static_cast<std::size_t>(mask)];
            for (int l = 1; l <= t_; ++l) {
                CSeries num = CSeries::one(T_);
                for (int a = 1; a <= t_; ++a) {
                    num *= theta(sqrt_of(mask), a - l);
                }
                bl.push_back(series_div(num, unit_den[static_cast<std::size_t>(l - 1)]));
            }
            auto& en = ent[static_cast<std::size_t>(mask)];
            for (int d = 1 - t_; d <= t_ - 1; ++d) {
                en.push_back(entry(mask, d));
            }
        }

        struct Job {
            std::size_t part;
            std::vector<int> l;
        };
        std::vector<Job> jobs;
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            const int k = static_cast<int>(parts[pi].blocks.size());
            if (!opt.all_tuples && k > t_) {
                continue;
            }
            std::vector<int> l(static_cast<std::size_t>(k), 1);
            while (true) {
                bool ok = true;
                if (!opt.all_tuples) {
                    std::vector<int> sorted = l;
                    std::sort(sorted.begin(), sorted.end());
                    ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                }
                if (ok) {
                    jobs.push_back({pi, l});
                }
                int i = k - 1;
                while (i >= 0 && l[static_cast<std::size_t>(i)] == t_) {
                    l[static_cast<std::size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) {
                    break;
                }
                ++l[static_cast<std::size_t>(i)];
            }
        }

        std::vector<std::vector<Perm>> perms(static_cast<std::size_t>(n_) + 1);
        for (int k = 1; k <= n_; ++k) {
            perms[static_cast<std::size_t>(k)] = permutations_with_sign(k);
        }
        std::vector<CSeries> weight_pow{CSeries::one(T_)};
        for (int k = 1; k < n_; ++k) {
            weight_pow.push_back(weight_pow.back() * weight);
        }

        CSeries total = parallel_sum(jobs.size(), opt.threads, CSeries::zero(T_), [&](std::size_t j) {
            const Job& job = jobs[j];
            const auto& blocks = parts[job.part].blocks;
            const int k = static_cast<int>(blocks.size());
            std::vector<int> masks;
            CSeries term = weight_pow[static_cast<std::size_t>(k - 1)];
            for (int m = 0; m < k; ++m) {
                masks.push_back(block_mask(blocks[static_cast<std::size_t>(m)]));
                term *= block[static_cast<std::size_t>(masks.back())][static_cast<std::size_t>(job.l[static_cast<std::size_t>(m)] - 1)];
            }
            CSeries det = CSeries::zero(T_);
            for (const auto& perm : perms[static_cast<std::size_t>(k)]) {
                CSeries prod = CSeries::one(T_);
                for (int i = 0; i < k && !prod.is_zero_series(); ++i) {
                    const int jj = perm.p[static_cast<std::size_t>(i)];
                    const int d = job.l[static_cast<std::size_t>(i)] - job.l[static_cast<std::size_t>(jj)];
                    prod *= ent[static_cast<std::size_t>(masks[static_cast<std::size_t>(i)])][static_cast<std::size_t>(d + t_ - 1)];
                }
                if (perm.sign > 0) {
                    det += prod;
                } else {
                    det -= prod;
                }
            }
            return term * det;
        });
        return (prefactor * total).truncated(T_);
    }

private:
    int t_;
    int n_;
    int T_;
    std::vector<SValue> s_;
    std::vector<Rational> prod_;
    std::vector<Rational> root_;
};

}  // namespace

SValue SValue::from_square(const Rational& s)
{
    if (s <= 1) {
        throw std::invalid_argument("s must be a rational > 1, got " + s.get_str());
    }
    auto root = rational_sqrt(s);
    if (!root) {
        throw std::invalid_argument("s must be the square of a rational, got " + s.get_str());
    }
    return SValue{s, *root};
}

void validate_svalues(const std::vector<SValue>& s, int t)
{
    const int n = static_cast<int>(s.size());
    if (n > 8) {
        throw std::invalid_argument("at most 8 insertion points are supported");
    }
    for (const auto& sv : s) {
        if (sv.sqrt_s * sv.sqrt_s != sv.s || sv.sqrt_s <= 0) {
            throw std::invalid_argument("sqrt_s does not match s = " + sv.s.get_str());
        }
        if (sv.s <= 1) {
            throw std::invalid_argument("s must be > 1");
        }
    }
    for (int mask = 1; mask < (1 << n); ++mask) {
        Rational p(1);
        for (int j = 0; j < n; ++j) {
            if (mask & (1 << j)) {
                p *= s[static_cast<std::size_t>(j)].s;
            }
        }
        for (int m = 0; m < t; ++m) {
            if (CycloNum(p) * xi2(t, 2L * m) == CycloNum(1)) {
                throw std::invalid_argument("sub-product s_" + mask_string(mask) + " collides with a t-th root of unity");
            }
        }
    }
}

std::vector<SValue> parse_svalues(const std::string& text)
{
    std::vector<SValue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(SValue::from_square(parse_rational(item)));
        }
    }
    return out;
}

std::vector<SetPartition> set_partitions(int n)
{
    if (n < 1 || n > 8) {
        throw std::invalid_argument("set_partitions needs 1 <= n <= 8");
    }
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int nblocks) -> void {
        if (i == n) {
            SetPartition sp;
            sp.blocks.resize(static_cast<std::size_t>(nblocks));
            for (int x = 0; x < n; ++x) {
                sp.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
            }
            out.push_back(std::move(sp));
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(nblocks, b + 1));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 1);
    return out;
}

Rational level_sum(const Partition& nu, const SValue& s)
{
    Rational out(0);
    const int l = nu.length();
    for (int i = 1; i <= l; ++i) {
        out += pow(s.sqrt_s, 2L * (nu.part(i) - i) + 1);
    }
    out += pow(s.sqrt_s, 1L - 2L * l) / (s.s - 1);
    return out;
}

QSeries brute_force_Ft(int t, const std::vector<SValue>& s, int order, int threads)
{
    if (t < 2) {
        throw std::invalid_argument("t must be >= 2");
    }
    if (order < 0) {
        throw std::invalid_argument("order must be >= 0");
    }
    for (const auto& sv : s) {
        if (sv.s == 1) {
            throw std::invalid_argument("s = 1 is not allowed");
        }
    }
    return partition_average(enumerate_t_cores(t, order), s, order, threads);
}

QSeries bloch_okounkov_F(const std::vector<SValue>& s, int order, int threads)
{
    if (order < 0) {
        throw std::invalid_argument("order must be >= 0");
    }
    return partition_average(all_partitions(order), s, order, threads);
}

QSeries bloch_okounkov_one_point(const SValue& s, int order)
{
    if (order < 0) {
        throw std::invalid_argument("order must be >= 0");
    }
    // value[k][v + order + 1]: #{(nu, i) : |nu| = k, nu_i - i = v}; length[k][l]: #{nu : l(nu) = l}
    const int off = order + 1;
    std::vector<std::vector<long long>> value(static_cast<std::size_t>(order) + 1, std::vector<long long>(static_cast<std::size_t>(2 * off + 1), 0));
    std::vector<std::vector<long long>> length(static_cast<std::size_t>(order) + 1, std::vector<long long>(static_cast<std::size_t>(order) + 1, 0));
    QSeries den = QSeries::zero(2 * order);
    for (int k = 0; k <= order; ++k) {
        long long count = 0;
        auto& vk = value[static_cast<std::size_t>(k)];
        auto& lk = length[static_cast<std::size_t>(k)];
        for_each_partition(k, [&](const std::vector<int>& parts) {
            ++count;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                ++vk[static_cast<std::size_t>(parts[i] - static_cast<int>(i) - 1 + off)];
            }
            ++lk[parts.size()];
        });
        den.add_term(2 * k, Rational(static_cast<long>(count)));
    }
    QSeries num = QSeries::zero(2 * order);
    for (int k = 0; k <= order; ++k) {
        Rational acc(0);
        for (int v = -off; v <= off; ++v) {
            const long long c = value[static_cast<std::size_t>(k)][static_cast<std::size_t>(v + off)];
            if (c != 0) {
                acc += Rational(static_cast<long>(c)) * pow(s.sqrt_s, 2L * v + 1);
            }
        }
        for (int l = 0; l <= order; ++l) {
            const long long c = length[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            if (c != 0) {
                acc += Rational(static_cast<long>(c)) * pow(s.sqrt_s, 1L - 2L * l) / (s.s - 1);
            }
        }
        num.add_term(2 * k, acc);
    }
    return series_div(num, den);
}

CSeries closed_Ft_cyclo(int t, const std::vector<SValue>& s, const Rational& Q2, int order, const ClosedOptions& opt)
{
    if (Q2 == 0) {
        throw std::invalid_argument("Q2 must be nonzero");
    }
    ClosedSum cs(t, s, order);
    const int T = cs.trunc2();
    auto entry = [&](int mask, int d) {
        CSeries num = theta3(CycloNum(-Q2 / cs.s_of(mask)) * xi2(t, 2L * d), T);
        CSeries den = cs.theta(cs.sqrt_of(mask), -d);
        return cs.divide(num, den, "block " + mask_string(mask) + ", offset " + std::to_string(-d));
    };
    CSeries pre = CSeries::one(T).scaled(CycloNum(cs.sinh_prefactor()));
    if (cs.n() > 0) {
        pre = series_div(pre, theta3(CycloNum(-Q2 / cs.s_of(cs.full_mask())), T));
    }
    CSeries weight = series_div(CSeries::one(T), theta3(CycloNum(-Q2), T));
    return cs.run(entry, pre, weight, opt);
}

CSeries closed_Ft_r_cyclo(int t, const std::vector<SValue>& s, int r, int order, const ClosedOptions& opt)
{
    const int n = static_cast<int>(s.size());
    if (n < 2) {
        throw std::invalid_argument("the theta-only formula needs n >= 2");
    }
    if (r < 1 || r >= n) {
        throw std::invalid_argument("r must satisfy 1 <= r < n");
    }
    ClosedSum cs(t, s, order);
    const int T = cs.trunc2();
    const int head = (1 << r) - 1;
    const int rest = cs.full_mask() & ~head;
    const Rational root_head = cs.sqrt_of(head);
    auto entry = [&](int mask, int d) {
        CSeries num = cs.theta(root_head / cs.sqrt_of(mask), d);
        CSeries den = cs.theta(cs.sqrt_of(mask), -d);
        return cs.divide(num, den, "block " + mask_string(mask) + ", offset " + std::to_string(-d));
    };
    CSeries pre = CSeries::one(T).scaled(CycloNum(cs.sinh_prefactor()));
    pre = cs.divide(pre, cs.theta(inverse(cs.sqrt_of(rest)), 0), "block " + mask_string(rest) + " (inverse)");
    CSeries weight = cs.divide(CSeries::one(T), cs.theta(root_head, 0), "block " + mask_string(head));
    return cs.run(entry, pre, weight, opt);
}

QSeries rational_part_checked(const CSeries& f)
{
    QSeries out = QSeries::zero(f.trunc2());
    f.for_each_term([&](int e, const CycloNum& c) {
        auto r = c.as_rational();
        if (!r) {
            throw std::logic_error("non-rational coefficient at Q^" + std::to_string(e) + "/2: " + c.to_string());
        }
        if (e % 2 != 0) {
            throw std::logic_error("half-integer exponent " + std::to_string(e) + "/2 survived");
        }
        out.add_term(e, *r);
    });
    return out;
}

QSeries closed_Ft(int t, const std::vector<SValue>& s, const Rational& Q2, int order, const ClosedOptions& opt)
{
    return rational_part_checked(closed_Ft_cyclo(t, s, Q2, order, opt));
}

QSeries closed_Ft_r(int t, const std::vector<SValue>& s, int r, int order, const ClosedOptions& opt)
{
    return rational_part_checked(closed_Ft_r_cyclo(t, s, r, order, opt));
}

QSeries one_point_closed(int t, const SValue& s, int order)
{
    validate_svalues({s}, t);
    const int T = 2 * order;
    CSeries out = CSeries::one(T).scaled(CycloNum(Rational(t) / (pow(s.sqrt_s, t) - pow(s.sqrt_s, -t))));
    for (int a = 1; a < t; ++a) {
        CSeries num = vartheta(ThetaArg::from_sqrt(CycloNum(s.sqrt_s) * xi2(t, a)), T);
        CSeries den = vartheta(ThetaArg::from_sqrt(xi2(t, a)), T);
        out *= series_div(num, den);
    }
    return rational_part_checked(out);
}

namespace {

template <class Weight>
BiSeries<QuadraticNumber> vertex_sum(const Rational& q, int order_total, Weight&& weight)
{
    if (q <= 1) {
        throw std::invalid_argument("q must be a rational > 1");
    }
    BiSeries<QuadraticNumber> out(2 * order_total);
    for (int a = 0; a <= order_total; ++a) {
        const auto mus = partitions_of(a);
        for (int b = 0; a + b <= order_total; ++b) {
            const auto nus = partitions_of(b);
            for (const auto& mu : mus) {
                for (const auto& nu : nus) {
                    QuadraticNumber c = topological_vertex(Partition(), mu.conjugate(), nu, q) *
                                        topological_vertex(Partition(), mu, nu.conjugate(), q);
                    if ((a + b) % 2 != 0) {
                        c = -c;
                    }
                    out.add_term(2 * b, 2 * a, c * to_quadratic(weight(nu)));
                }
            }
        }
    }
    return out;
}

}  // namespace

BiSeries<Rational> qdeformed_Z_sum(const Rational& q, int order_total)
{
    return rational_bi(vertex_sum(q, order_total, [](const Partition&) { return Rational(1); }), "Z sum");
}

BiSeries<Rational> qdeformed_Z_product(const Rational& q, int order_total)
{
    if (q <= 1) {
        throw std::invalid_argument("q must be a rational > 1");
    }
    const int T = 2 * order_total;
    using B = BiSeries<Rational>;
    B out = B::one(T);
    if (order_total == 0) {
        return out;
    }
    out = macmahon(q, 0, 2, T);
    for (int b = 1; 2 * b - 1 <= order_total; ++b) {
        if (2 * b + 1 <= order_total) {
            out = out * macmahon(q, 2 * b, 2 * b + 2, T);
        }
        out = out * macmahon(q, 2 * b, 2 * b - 2, T);
        if (2 * b <= order_total) {
            B geo = B::one(T);
            for (int k = 1; 2 * b * k <= order_total; ++k) {
                geo.add_term(2 * b * k, 2 * b * k, Rational(1));
            }
            B m = macmahon(q, 2 * b, 2 * b, T);
            B minv = inverse(m);
            out = out * geo * minv * minv;
        }
    }
    return out;
}

BiSeries<Rational> qdeformed_Zn_sum(const Rational& q, const std::vector<SValue>& s, int order_total)
{
    if (s.empty()) {
        return BiSeries<Rational>::one(2 * order_total);
    }
    auto num = vertex_sum(q, order_total, [&](const Partition& nu) {
        Rational p(1);
        for (const auto& sv : s) {
            p *= level_sum(nu, sv);
        }
        return p;
    });
    auto den = vertex_sum(q, order_total, [](const Partition&) { return Rational(1); });
    return rational_bi(num * inverse(den), "Zn sum");
}

LaurentTaylor correlation_expansion(int t, int n, const std::vector<int>& l_orders, int q_order)
{
    if (t < 2) {
        throw std::invalid_argument("t must be >= 2");
    }
    if (static_cast<int>(l_orders.size()) != n || n < 1) {
        throw std::invalid_argument("one l-order per insertion point is required");
    }
    const int T = 2 * q_order;
    std::vector<int> max_exp;
    int emax = -1;
    for (int l : l_orders) {
        if (l < 0) {
            throw std::invalid_argument("l-orders must be >= 0");
        }
        max_exp.push_back(l - 1);
        emax = std::max(emax, l - 1);
    }
    const auto cores = enumerate_t_cores(t, q_order);
    std::vector<Rational> bern;
    for (int m = 0; m <= emax + 1; ++m) {
        bern.push_back(bernoulli(static_cast<unsigned>(m)));
    }
    // z^e coefficient of T(nu) at s = e^z, e = -1..emax:
    // sum_i (nu_i - i + 1/2)^e / e! + B_{e+1}(1/2 - l) / (e+1)!
    auto coeffs = [&](const Partition& nu) {
        std::vector<Rational> c(static_cast<std::size_t>(emax + 2), Rational(0));
        c[0] = 1;
        const Rational x = Rational(1, 2) - nu.length();
        for (int e = 0; e <= emax; ++e) {
            Rational acc(0);
            for (int i = 1; i <= nu.length(); ++i) {
                acc += pow(Rational(nu.part(i) - i) + Rational(1, 2), e);
            }
            acc /= factorial(static_cast<unsigned>(e));
            Rational bp(0);
            for (int k = 0; k <= e + 1; ++k) {
                bp += binomial(e + 1, k) * bern[static_cast<std::size_t>(k)] * pow(x, e + 1 - k);
            }
            c[static_cast<std::size_t>(e + 1)] = acc + bp / factorial(static_cast<unsigned>(e + 1));
        }
        return c;
    };
    LaurentTaylor num(n, max_exp, T);
    QSeries den = QSeries::zero(T);
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int k = 0; k <= q_order; ++k) {
        for (const auto& nu : cores[static_cast<std::size_t>(k)]) {
            den.add_term(2 * k, Rational(1));
            const auto c = coeffs(nu);
            // all exponent vectors with e_j in [-1, max_exp_j]
            std::fill(e.begin(), e.end(), -1);
            while (true) {
                Rational prod(1);
                for (int j = 0; j < n; ++j) {
                    prod *= c[static_cast<std::size_t>(e[static_cast<std::size_t>(j)] + 1)];
                }
                if (!is_zero(prod)) {
                    num.add(e, QSeries::monomial(prod, 2 * k, T));
                }
                int j = n - 1;
                while (j >= 0 && e[static_cast<std::size_t>(j)] == max_exp[static_cast<std::size_t>(j)]) {
                    e[static_cast<std::size_t>(j)] = -1;
                    --j;
                }
                if (j < 0) {
                    break;
                }
                ++e[static_cast<std::size_t>(j)];
            }
        }
    }
    return num.times(series_inverse(den));
}

std::string method_name(NPointMethod m)
{
    switch (m) {
        case NPointMethod::Brute:
            return "brute";
        case NPointMethod::Closed:
            return "closed";
        case NPointMethod::ClosedR:
            return "closed-r";
        case NPointMethod::Contour:
            return "contour";
    }
    return "unknown";
}

}  // namespace tcore
