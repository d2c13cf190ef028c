#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tcore {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Validates; trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// lambda_j for 1-based j; zero beyond the length.
    int part(int j) const { return j >= 1 && j <= length() ? parts_[static_cast<std::size_t>(j - 1)] : 0; }

    Partition conjugate() const;

    /// hooks[j-1][k-1] = h(j,k) for every box.
    std::vector<std::vector<int>> hook_lengths() const;

    /// n(lambda) = sum (i-1) lambda_i.
    long n_statistic() const;

    /// Twice the content sum, 2 sum_{(j,k)} (k - j).
    long kappa() const;

    /// Young-diagram containment.
    bool contains(const Partition& inner) const;

    /// "(6,4,4,2,1)", "()" for the empty partition.
    std::string to_string() const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Finite view of the 0/1 sequence of a partition: bit_i = 0 iff i = lambda_j - j
/// for some j >= 1. Outside [lo, hi] the bits are 0 below lo and 1 above hi.
struct MayaWindow {
    int lo = 0;
    int hi = -1;
    std::vector<std::uint8_t> bits;  // bits[i - lo]

    int bit(int i) const;
    /// #{i < 0 : bit 1} == #{i >= 0 : bit 0}, counting the outside guarantee.
    bool charge_zero() const;
    /// Bits left of 0, a bar, then bits from 0 (e.g. "0010101|10011011").
    std::string to_string() const;
};

/// Throws std::invalid_argument when the window cannot represent lambda
/// faithfully (some lambda_j - j falls outside while the guarantee fails).
MayaWindow maya(const Partition& lambda, int lo, int hi);

/// Inverse of maya(); throws when the window violates the charge-zero condition.
Partition partition_from_maya(const MayaWindow& w);

enum class TCoreMethod { AllHooks, HookEqualsT, MayaPairs };

bool is_t_core(const Partition& lambda, int t, TCoreMethod method = TCoreMethod::AllHooks);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Calls f(parts) for every partition of n (parts as a weakly decreasing
/// vector), in reverse lexicographic order, without materializing the list.
template <class F>
void for_each_partition(int n, F&& f)
{
    std::vector<int> a;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            f(static_cast<const std::vector<int>&>(a));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            a.push_back(p);
            self(self, remaining - p, p);
            a.pop_back();
        }
    };
    rec(rec, n, n);
}

/// t-cores of each size 0..max_size, generated directly from t monotone Maya
/// tracks. Result[k] lists the t-cores of size k in reverse lexicographic order.
std::vector<std::vector<Partition>> enumerate_t_cores(int t, int max_size);

/// Same result by filtering every partition through is_t_core.
std::vector<std::vector<Partition>> enumerate_t_cores_by_filter(int t, int max_size);

/// Coefficients 0..max_size of prod_{b>=1} (1 - Q^{bt})^e / (1 - Q^b).
std::vector<long long> tcore_product_counts(int t, int exponent, int max_size);

}  // namespace tcore
