#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "tcore/partition.hpp"

using namespace tcore;

namespace {

std::vector<int> hook_multiset(const Partition& p)
{
    std::vector<int> out;
    for (const auto& row : p.hook_lengths()) {
        out.insert(out.end(), row.begin(), row.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("conjugation")
{
    CHECK(Partition({6, 4, 4, 2, 1}).conjugate() == Partition({5, 4, 3, 3, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : partitions_of(n)) {
            CHECK(p.conjugate().conjugate() == p);
        }
    }
}

TEST_CASE("invalid partitions are rejected")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
}

TEST_CASE("hook lengths")
{
    CHECK(Partition({1}).hook_lengths() == std::vector<std::vector<int>>{{1}});
    CHECK(Partition({2, 1}).hook_lengths() == std::vector<std::vector<int>>{{3, 1}, {1}});
    Partition p({3, 2});
    long sum = 0;
    for (const auto& row : p.hook_lengths()) {
        for (int h : row) {
            sum += h;
        }
    }
    CHECK(p.n_statistic() == 2);
    CHECK(p.conjugate().n_statistic() == 4);
    CHECK(sum == 11);
}

TEST_CASE("sum of hooks equals n(nu) + n(nu^t) + |nu|")
{
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : partitions_of(n)) {
            long sum = 0;
            for (const auto& row : p.hook_lengths()) {
                for (int h : row) {
                    sum += h;
                }
            }
            CHECK(sum == p.n_statistic() + p.conjugate().n_statistic() + p.size());
        }
    }
}

TEST_CASE("maya windows")
{
    CHECK(maya(Partition({6, 4, 4, 2, 1}), -7, 7).to_string() == "0010101|10011011");
    MayaWindow vac = maya(Partition(), -3, 2);
    CHECK(vac.to_string() == "000|111");
    CHECK(vac.charge_zero());
    CHECK_THROWS(maya(Partition({5}), -2, 2));
    CHECK_THROWS(maya(Partition({1, 1, 1, 1}), -2, 2));

    MayaWindow bad = vac;
    bad.bits[0] = 1;
    CHECK_FALSE(bad.charge_zero());
    CHECK_THROWS(partition_from_maya(bad));
}

TEST_CASE("maya round trip on random partitions")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 31);
        auto all = partitions_of(n);
        const Partition& p = all[rng() % all.size()];
        const int lo = -p.length() - static_cast<int>(rng() % 4);
        const int hi = std::max(p.part(1), 0) + static_cast<int>(rng() % 4);
        CHECK(partition_from_maya(maya(p, lo, hi)) == p);
    }
}

TEST_CASE("hooks correspond to 1-then-0 pairs of the maya sequence")
{
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : partitions_of(n)) {
            const int lo = -p.length() - 1;
            const int hi = p.part(1) + 1;
            MayaWindow w = maya(p, lo, hi);
            std::vector<int> pairs;
            for (int a = lo; a <= hi; ++a) {
                for (int b = a + 1; b <= hi; ++b) {
                    if (w.bit(a) == 1 && w.bit(b) == 0) {
                        pairs.push_back(b - a);
                    }
                }
            }
            std::sort(pairs.begin(), pairs.end());
            CHECK(pairs == hook_multiset(p));
        }
    }
}

TEST_CASE("t-core predicates")
{
    CHECK_FALSE(is_t_core(Partition({2}), 2));
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> stair;
        for (int i = k; i >= 1; --i) {
            stair.push_back(i);
        }
        for (auto m : {TCoreMethod::AllHooks, TCoreMethod::HookEqualsT, TCoreMethod::MayaPairs}) {
            CHECK(is_t_core(Partition(stair), 2, m));
        }
    }
    for (int t = 2; t <= 7; ++t) {
        CHECK(is_t_core(Partition(), t));
    }
    CHECK_THROWS(is_t_core(Partition(), 1));
}

TEST_CASE("the three t-core predicates agree")
{
    for (int t = 2; t <= 5; ++t) {
        for (int n = 0; n <= 18; ++n) {
            for_each_partition(n, [&](const std::vector<int>& parts) {
                Partition p(parts);
                bool a = is_t_core(p, t, TCoreMethod::AllHooks);
                bool b = is_t_core(p, t, TCoreMethod::HookEqualsT);
                bool c = is_t_core(p, t, TCoreMethod::MayaPairs);
                if (a != b || a != c) {
                    FAIL_CHECK("disagreement at " << p.to_string() << " t=" << t);
                }
            });
        }
    }
}

TEST_CASE("partition generating function")
{
    // coefficients of prod (1 - Q^n)^{-1}, Euler's pentagonal recurrence as oracle
    const int N = 40;
    std::vector<long long> p(N + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            long long sign = (k % 2 == 1) ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) {
                p[n] += sign * p[n - g2];
            }
        }
    }
    for (int n = 0; n <= N; ++n) {
        long long count = 0;
        for_each_partition(n, [&](const std::vector<int>&) { ++count; });
        CHECK(count == p[n]);
    }
}

TEST_CASE("t-core enumeration: direct generation equals filtering")
{
    auto two = enumerate_t_cores(2, 10);
    for (int n = 0; n <= 10; ++n) {
        bool tri = (n == 0 || n == 1 || n == 3 || n == 6 || n == 10);
        CHECK(two[static_cast<std::size_t>(n)].size() == (tri ? 1u : 0u));
    }
    for (int t = 2; t <= 6; ++t) {
        auto direct = enumerate_t_cores(t, 18);
        auto filtered = enumerate_t_cores_by_filter(t, 18);
        CHECK(direct == filtered);
        CHECK(direct[0] == std::vector<Partition>{Partition()});
    }
}

TEST_CASE("t-core counts follow the product with exponent t")
{
    for (int t = 2; t <= 6; ++t) {
        auto cores = enumerate_t_cores(t, 30);
        auto expected = tcore_product_counts(t, t, 30);
        for (int n = 0; n <= 30; ++n) {
            CHECK(static_cast<long long>(cores[static_cast<std::size_t>(n)].size()) == expected[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("kappa")
{
    CHECK(Partition().kappa() == 0);
    CHECK(Partition({2}).kappa() == 2);
    CHECK(Partition({2, 1}).kappa() == 0);
    for (int n = 0; n <= 10; ++n) {
        for (const auto& p : partitions_of(n)) {
            CHECK(p.conjugate().kappa() == -p.kappa());
        }
    }
}
