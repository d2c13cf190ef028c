#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "tcore/npoint.hpp"
#include "tcore/symfunc.hpp"

using namespace tcore;

namespace {

SValue sv(long p, long q = 1) { return SValue::from_square(Rational(p, q)); }

std::vector<Rational> coeffs(const QSeries& f, int order)
{
    std::vector<Rational> out;
    for (int k = 0; k <= order; ++k) {
        out.push_back(f.coeff(2 * k));
    }
    return out;
}

long bell(int n)
{
    // Bell triangle
    std::vector<long> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<long> next{row.back()};
        for (long x : row) {
            next.push_back(next.back() + x);
        }
        row = next;
    }
    return row.back();
}

}  // namespace

TEST_CASE("SValue validation")
{
    CHECK(sv(9, 4).sqrt_s == Rational(3, 2));
    CHECK_THROWS(SValue::from_square(Rational(2)));
    CHECK_THROWS(SValue::from_square(Rational(1)));
    CHECK_THROWS(SValue::from_square(Rational(1, 4)));
    CHECK_NOTHROW(validate_svalues({sv(4), sv(9, 4), sv(25, 16)}, 3));
    SValue bad{Rational(4), Rational(3)};
    CHECK_THROWS(validate_svalues({bad}, 2));
    auto parsed = parse_svalues("4,9/4");
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[1].sqrt_s == Rational(3, 2));
}

TEST_CASE("set partitions")
{
    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    for (int n = 1; n <= 6; ++n) {
        auto all = set_partitions(n);
        CHECK(static_cast<long>(all.size()) == bell(n));
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& sp : all) {
            seen.insert(sp.blocks);
            std::vector<int> cover;
            for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
                CHECK(!sp.blocks[b].empty());
                if (b > 0) {
                    CHECK(sp.blocks[b - 1].front() < sp.blocks[b].front());
                }
                cover.insert(cover.end(), sp.blocks[b].begin(), sp.blocks[b].end());
            }
            std::sort(cover.begin(), cover.end());
            std::vector<int> expect(static_cast<std::size_t>(n));
            std::iota(expect.begin(), expect.end(), 1);
            CHECK(cover == expect);
        }
        CHECK(seen.size() == all.size());
    }
    CHECK(set_partitions(5).size() == 52);
    CHECK_THROWS(set_partitions(0));
}

TEST_CASE("one-point function of 2-cores at s = 4")
{
    QSeries f = brute_force_Ft(2, {sv(4)}, 6);
    std::vector<Rational> expect = {Rational(2, 3), Rational(3, 2), Rational(-3, 2), Rational(75, 8),
                                    Rational(-87, 8), Rational(99, 8), Rational(375, 32)};
    CHECK(coeffs(f, 6) == expect);
    for (int t = 2; t <= 5; ++t) {
        CHECK(brute_force_Ft(t, {sv(9, 4)}, 0).coeff(0) == Rational(3, 2) / Rational(5, 4));
    }
    CHECK(brute_force_Ft(3, {}, 5) == QSeries::one(10));
}

TEST_CASE("closed formula at n = 1")
{
    CHECK(closed_Ft(2, {sv(4)}, Rational(1), 6) == brute_force_Ft(2, {sv(4)}, 6));
    for (int t = 2; t <= 4; ++t) {
        QSeries a = closed_Ft(t, {sv(9, 4)}, Rational(1), 6);
        CHECK(a == one_point_closed(t, sv(9, 4), 6));
        CHECK(a == brute_force_Ft(t, {sv(9, 4)}, 6));
    }
}

TEST_CASE("closed formula is independent of Q2")
{
    const std::vector<SValue> s = {sv(4), sv(9, 4)};
    QSeries ref = closed_Ft(3, s, Rational(1), 6);
    CHECK(closed_Ft(3, s, Rational(2), 6) == ref);
    CHECK(closed_Ft(3, s, Rational(5, 3), 6) == ref);
    CHECK(ref == brute_force_Ft(3, s, 6));
    CHECK_THROWS(closed_Ft(3, s, Rational(0), 6));
}

TEST_CASE("repeated l-tuples contribute nothing")
{
    const std::vector<SValue> s = {sv(4), sv(9, 4)};
    ClosedOptions all;
    all.all_tuples = true;
    CHECK(closed_Ft_cyclo(3, s, Rational(1), 6, all) == closed_Ft_cyclo(3, s, Rational(1), 6));
}

TEST_CASE("theta-only specialization")
{
    const std::vector<SValue> s = {sv(4), sv(9, 4)};
    for (int t = 2; t <= 3; ++t) {
        CHECK(closed_Ft_r(t, s, 1, 6) == closed_Ft(t, s, Rational(1), 6));
    }
    CHECK(closed_Ft_r(2, s, 1, 8) == brute_force_Ft(2, s, 8));
    CHECK_THROWS(closed_Ft_r(2, {sv(4)}, 1, 4));
    CHECK_THROWS(closed_Ft_r(2, s, 2, 4));
}

TEST_CASE("two-point shape without Q2 at t = 3")
{
    // t prod theta(s1 s2 xi^a)/theta(xi^a) + prod theta(s1 xi^a) theta(s2 xi^a)/theta(xi^a)^2
    //   * sum_{l1 != l2} theta(s2/s1 xi^d) theta(xi^d) / (theta(xi^d/s1) theta(s2 xi^d)), d = l1 - l2
    const int t = 3;
    const int T = 12;
    const SValue s1 = sv(4);
    const SValue s2 = sv(9, 4);
    auto th = [&](const Rational& root, long e) {
        return vartheta(ThetaArg::from_sqrt(CycloNum(root) * CycloNum::root_of_unity(2 * t, e)), T);
    };
    CSeries first = CSeries::one(T).scaled(CycloNum(t));
    CSeries second = CSeries::one(T);
    for (int a = 1; a < t; ++a) {
        first = series_div(first * th(s1.sqrt_s * s2.sqrt_s, a), th(Rational(1), a));
        second = series_div(second * th(s1.sqrt_s, a) * th(s2.sqrt_s, a), th(Rational(1), a) * th(Rational(1), a));
    }
    CSeries inner = CSeries::zero(T);
    for (int l1 = 1; l1 <= t; ++l1) {
        for (int l2 = 1; l2 <= t; ++l2) {
            if (l1 == l2) {
                continue;
            }
            const int d = l1 - l2;
            inner += series_div(th(s2.sqrt_s / s1.sqrt_s, d) * th(Rational(1), d),
                                th(inverse(s1.sqrt_s), d) * th(s2.sqrt_s, d));
        }
    }
    Rational pre = inverse((pow(s1.sqrt_s, t) - pow(s1.sqrt_s, -t)) * (pow(s2.sqrt_s, t) - pow(s2.sqrt_s, -t)));
    CSeries shape = (first + second * inner).scaled(CycloNum(pre));
    CHECK(rational_part_checked(shape) == closed_Ft_r(t, {s1, s2}, 1, 6));
}

TEST_CASE("three-route agreement")
{
    const std::vector<std::vector<SValue>> tuples = {
        {sv(25, 16)}, {sv(4), sv(9, 4)}, {sv(9, 4), sv(25, 16)}, {sv(4), sv(9, 4), sv(25, 16)}};
    for (int t = 2; t <= 4; ++t) {
        for (const auto& s : tuples) {
            CAPTURE(t);
            CAPTURE(s.size());
            QSeries brute = brute_force_Ft(t, s, 8);
            CHECK(closed_Ft(t, s, Rational(1), 8) == brute);
            if (s.size() >= 2) {
                for (int r = 1; r < static_cast<int>(s.size()); ++r) {
                    CHECK(closed_Ft_r(t, s, r, 8) == brute);
                }
            }
        }
    }
}

TEST_CASE("threaded sums match the serial ones")
{
    const std::vector<SValue> s = {sv(4), sv(9, 4)};
    ClosedOptions par;
    par.threads = 3;
    CHECK(closed_Ft_cyclo(3, s, Rational(2), 6, par) == closed_Ft_cyclo(3, s, Rational(2), 6));
    CHECK(brute_force_Ft(3, s, 10, 4) == brute_force_Ft(3, s, 10));
}

TEST_CASE("q-deformed partition function")
{
    for (Rational q : {Rational(2), Rational(3, 2)}) {
        auto sum = qdeformed_Z_sum(q, 6);
        CHECK(sum.coeff(0, 0) == Rational(1));
        QuadraticNumber s1 = schur(Partition({1}), SpecPoint(q));
        CHECK(QuadraticNumber(sum.coeff(0, 2)) == -(s1 * s1));
        CHECK(sum == qdeformed_Z_product(q, 6));
    }
    CHECK(qdeformed_Z_product(Rational(2), 0) == BiSeries<Rational>::one(0));
}

TEST_CASE("q-deformed n-point function")
{
    const Rational q(2);
    const int N = 4;
    CHECK(qdeformed_Zn_sum(q, {}, N) == BiSeries<Rational>::one(2 * N));
    auto one = qdeformed_Zn_sum(q, {sv(4)}, N);
    CHECK(one.coeff(0, 0) == Rational(2, 3));

    // Q1 = 0 leaves the Schur-product average
    const SpecPoint rho(q);
    QSeries num = QSeries::zero(2 * N);
    QSeries den = QSeries::zero(2 * N);
    for (int k = 0; k <= N; ++k) {
        for (const auto& nu : partitions_of(k)) {
            QuadraticNumber w = schur(nu, rho) * schur(nu.conjugate(), rho);
            REQUIRE(w.is_rational());
            Rational c = w.rational_part() * (k % 2 == 0 ? 1 : -1);
            num.add_term(2 * k, c * level_sum(nu, sv(4)));
            den.add_term(2 * k, c);
        }
    }
    CHECK(one.restrict_y_zero() == series_div(num, den));
}

TEST_CASE("Bloch-Okounkov function")
{
    CHECK(bloch_okounkov_F({}, 5) == QSeries::one(10));
    QSeries f = bloch_okounkov_F({sv(4)}, 6);
    CHECK(f.coeff(0) == Rational(2, 3));
    // (T(empty) + Q T((1))) / (1 + Q) at Q^1
    CHECK(f.coeff(2) == level_sum(Partition({1}), sv(4)) - level_sum(Partition(), sv(4)));
}

TEST_CASE("correlation functions of 2-cores")
{
    const int N = 6;
    LaurentTaylor lt = correlation_expansion(2, 1, {3}, N);
    CHECK(lt.coefficient({-1}) == QSeries::one(2 * N));
    CHECK(lt.coefficient({0}).is_zero_series());
    // z^1: d/dz of the one-point expansion at s = e^z
    QSeries f2 = lt.coefficient({1});
    std::vector<Rational> expect = {Rational(-1, 24), 1, -1, 4, -5, 6, -4};
    CHECK(coeffs(f2, N) == expect);
    QSeries classical = eisenstein(1, N) - eisenstein(1, N / 2).substitute_power(2).scaled(Rational(4));
    classical.add_term(0, Rational(-1, 6));
    CHECK(f2 == classical.truncated(2 * N));
    CHECK_THROWS(lt.coefficient({3}));
}

TEST_CASE("correlation function of 3-cores from the level series")
{
    // F_3(Q; e^z) = 3/(2 sinh(3z/2)) exp(sum_{a,l} E^a_l z^l / l!)
    const int N = 15;
    const int L = 4;
    LaurentTaylor lt = correlation_expansion(3, 1, {L}, N);
    const int T = 2 * N;
    // series in z with CSeries coefficients, z^0..z^L
    std::vector<CSeries> expo(static_cast<std::size_t>(L + 2), CSeries::zero(T));
    std::vector<CSeries> g(static_cast<std::size_t>(L + 2), CSeries::zero(T));
    for (int a = 1; a <= 2; ++a) {
        auto e = level_series_all(3, a, L + 1, N);
        for (int l = 1; l <= L + 1; ++l) {
            g[static_cast<std::size_t>(l)] += e[static_cast<std::size_t>(l - 1)].scaled(CycloNum(inverse(factorial(static_cast<unsigned>(l)))));
        }
    }
    // exp of g via the recursion k e_k = sum j g_j e_{k-j}
    expo[0] = CSeries::one(T);
    for (int k = 1; k <= L + 1; ++k) {
        CSeries acc = CSeries::zero(T);
        for (int j = 1; j <= k; ++j) {
            acc += (g[static_cast<std::size_t>(j)] * expo[static_cast<std::size_t>(k - j)]).scaled(CycloNum(Rational(j)));
        }
        expo[static_cast<std::size_t>(k)] = acc.scaled(CycloNum(Rational(1, k)));
    }
    // 3/(2 sinh(3z/2)) = z^{-1} (1 - 3z^2/8 + 21 z^4/640 - ...): Laurent coefficients via Bernoulli
    // x/(2 sinh(x/2)) = sum B_m(1/2) x^m/m!, x = 3z
    std::vector<Rational> h(static_cast<std::size_t>(L + 2), Rational(0));
    for (int m = 0; m <= L + 1; ++m) {
        Rational bp(0);
        for (int k = 0; k <= m; ++k) {
            bp += binomial(m, k) * bernoulli(static_cast<unsigned>(k)) * pow(Rational(1, 2), m - k);
        }
        h[static_cast<std::size_t>(m)] = bp * pow(Rational(3), m) / factorial(static_cast<unsigned>(m));
    }
    for (int e = -1; e <= L - 1; ++e) {
        CSeries acc = CSeries::zero(T);
        for (int m = 0; m <= e + 1; ++m) {
            acc += expo[static_cast<std::size_t>(e + 1 - m)].scaled(CycloNum(h[static_cast<std::size_t>(m)]));
        }
        CAPTURE(e);
        CHECK(rational_part_checked(acc) == lt.coefficient({e}));
    }
}
