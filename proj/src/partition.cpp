#include "tcore/partition.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int k = 0; k < p; ++k) {
            ++c[static_cast<std::size_t>(k)];
        }
    }
    return Partition(std::move(c));
}

std::vector<std::vector<int>> Partition::hook_lengths() const
{
    const Partition c = conjugate();
    std::vector<std::vector<int>> h(parts_.size());
    for (int j = 1; j <= length(); ++j) {
        auto& row = h[static_cast<std::size_t>(j - 1)];
        row.resize(static_cast<std::size_t>(part(j)));
        for (int k = 1; k <= part(j); ++k) {
            row[static_cast<std::size_t>(k - 1)] = part(j) + c.part(k) - j - k + 1;
        }
    }
    return h;
}

long Partition::n_statistic() const
{
    long n = 0;
    for (int i = 1; i <= length(); ++i) {
        n += static_cast<long>(i - 1) * part(i);
    }
    return n;
}

long Partition::kappa() const
{
    long sum = 0;
    for (int j = 1; j <= length(); ++j) {
        const long p = part(j);
        // sum_{k=1}^{p} (k - j)
        sum += p * (p + 1) / 2 - p * j;
    }
    return 2 * sum;
}

bool Partition::contains(const Partition& inner) const
{
    if (inner.length() > length()) {
        return false;
    }
    for (int j = 1; j <= inner.length(); ++j) {
        if (inner.part(j) > part(j)) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "," : "") << parts_[i];
    }
    os << ')';
    return os.str();
}

int MayaWindow::bit(int i) const
{
    if (i < lo) {
        return 0;
    }
    if (i > hi) {
        return 1;
    }
    return bits[static_cast<std::size_t>(i - lo)];
}

bool MayaWindow::charge_zero() const
{
    long zeros = 0;
    for (auto b : bits) {
        zeros += b == 0 ? 1 : 0;
    }
    return lo + zeros == 0;
}

std::string MayaWindow::to_string() const
{
    std::string s;
    for (int i = lo; i <= hi; ++i) {
        if (i == 0) {
            s += '|';
        }
        s += bit(i) ? '1' : '0';
    }
    if (hi < 0) {
        s += '|';
    }
    return s;
}

MayaWindow maya(const Partition& lambda, int lo, int hi)
{
    if (lo > hi) {
        throw std::invalid_argument("maya window needs lo <= hi");
    }
    std::set<int> zeros;
    const int l = lambda.length();
    for (int j = 1; j <= l + 1; ++j) {
        zeros.insert(lambda.part(j) - j);
    }
    auto is_zero_at = [&](int i) { return i <= -l - 1 || zeros.count(i) > 0; };
    for (int i = std::min(lo, -l - 1); i < lo; ++i) {
        if (!is_zero_at(i)) {
            throw std::invalid_argument("maya window lower end cuts through the partition");
        }
    }
    if (lambda.part(1) - 1 > hi) {
        throw std::invalid_argument("maya window upper end cuts through the partition");
    }
    MayaWindow w;
    w.lo = lo;
    w.hi = hi;
    for (int i = lo; i <= hi; ++i) {
        w.bits.push_back(is_zero_at(i) ? 0 : 1);
    }
    return w;
}

Partition partition_from_maya(const MayaWindow& w)
{
    if (!w.charge_zero()) {
        throw std::invalid_argument("0/1 sequence does not come from a partition (nonzero charge)");
    }
    std::vector<int> parts;
    int j = 0;
    for (int i = w.hi; i >= w.lo; --i) {
        if (w.bit(i) == 0) {
            ++j;
            parts.push_back(i + j);
        }
    }
    return Partition(std::move(parts));
}

bool is_t_core(const Partition& lambda, int t, TCoreMethod method)
{
    if (t < 2) {
        throw std::invalid_argument("t must be at least 2");
    }
    switch (method) {
    case TCoreMethod::AllHooks:
        for (const auto& row : lambda.hook_lengths()) {
            for (int h : row) {
                if (h % t == 0) {
                    return false;
                }
            }
        }
        return true;
    case TCoreMethod::HookEqualsT:
        for (const auto& row : lambda.hook_lengths()) {
            for (int h : row) {
                if (h == t) {
                    return false;
                }
            }
        }
        return true;
    case TCoreMethod::MayaPairs: {
        const int lo = -lambda.length() - 1;
        const int hi = lambda.part(1);
        const MayaWindow w = maya(lambda, lo, hi);
        for (int i = lo; i + t <= hi; ++i) {
            if (w.bit(i) == 1 && w.bit(i + t) == 0) {
                return false;
            }
        }
        return true;
    }
    }
    throw std::invalid_argument("unknown t-core method");
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

std::vector<std::vector<Partition>> enumerate_t_cores(int t, int max_size)
{
    if (t < 2 || max_size < 0) {
        throw std::invalid_argument("enumerate_t_cores needs t >= 2 and max_size >= 0");
    }
    std::vector<std::vector<Partition>> out(static_cast<std::size_t>(max_size) + 1);
    // Track r holds bits at positions r + t*m; a t-core has every track of the
    // form 0..01..1. The track's first 1 sits at r + t*k_r, sum k_r = 0, and
    // |lambda| = sum_r (t k_r^2 / 2 + r k_r) >= t K^2 / 2 - (t-1) K / 2 for
    // any single |k_r| = K.
    int bound = 0;
    while (static_cast<long>(t) * (bound + 1) * (bound + 1) - static_cast<long>(t - 1) * (bound + 1) <=
           2L * max_size) {
        ++bound;
    }
    std::vector<int> k(static_cast<std::size_t>(t), 0);
    std::function<void(int, int)> rec = [&](int r, int partial) {
        if (r == t - 1) {
            k[static_cast<std::size_t>(r)] = -partial;
            if (std::abs(partial) > bound) {
                return;
            }
            long twice_size = 0;
            for (int i = 0; i < t; ++i) {
                const long ki = k[static_cast<std::size_t>(i)];
                twice_size += t * ki * ki + 2L * i * ki;
            }
            if (twice_size > 2L * max_size) {
                return;
            }
            int lo = 0;
            int hi = 0;
            for (int i = 0; i < t; ++i) {
                const int p = i + t * k[static_cast<std::size_t>(i)];
                lo = std::min(lo, p - t);
                hi = std::max(hi, p);
            }
            MayaWindow w;
            w.lo = lo;
            w.hi = hi;
            for (int i = lo; i <= hi; ++i) {
                const int r0 = ((i % t) + t) % t;
                w.bits.push_back(i >= r0 + t * k[static_cast<std::size_t>(r0)] ? 1 : 0);
            }
            Partition lambda = partition_from_maya(w);
            if (lambda.size() <= max_size) {
                out[static_cast<std::size_t>(lambda.size())].push_back(std::move(lambda));
            }
            return;
        }
        for (int v = -bound; v <= bound; ++v) {
            k[static_cast<std::size_t>(r)] = v;
            rec(r + 1, partial + v);
        }
    };
    rec(0, 0);
    for (auto& bucket : out) {
        std::sort(bucket.begin(), bucket.end(), std::greater<>());
    }
    return out;
}

std::vector<std::vector<Partition>> enumerate_t_cores_by_filter(int t, int max_size)
{
    std::vector<std::vector<Partition>> out(static_cast<std::size_t>(max_size) + 1);
    for (int n = 0; n <= max_size; ++n) {
        for_each_partition(n, [&](const std::vector<int>& p) {
            Partition lambda(p);
            if (is_t_core(lambda, t)) {
                out[static_cast<std::size_t>(n)].push_back(std::move(lambda));
            }
        });
    }
    return out;
}

std::vector<long long> tcore_product_counts(int t, int exponent, int max_size)
{
    std::vector<long long> c(static_cast<std::size_t>(max_size) + 1, 0);
    c[0] = 1;
    auto mul_one_minus = [&](int d) {  // *= (1 - Q^d)
        for (int i = max_size; i >= d; --i) {
            c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - d)];
        }
    };
    auto div_one_minus = [&](int d) {  // /= (1 - Q^d)
        for (int i = d; i <= max_size; ++i) {
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - d)];
        }
    };
    for (int b = 1; b <= max_size; ++b) {
        div_one_minus(b);
        if (b * t <= max_size) {
            for (int e = 0; e < exponent; ++e) {
                mul_one_minus(b * t);
            }
        }
    }
    return c;
}

}  // namespace tcore
