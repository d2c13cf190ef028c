#include <doctest.h>

#include <random>

#include "tcore/bigcomplex.hpp"
#include "tcore/biseries.hpp"
#include "tcore/cyclo.hpp"
#include "tcore/laurent.hpp"
#include "tcore/quadratic.hpp"
#include "tcore/series.hpp"

using namespace tcore;

namespace {

CycloNum xi(int m, long k = 1) { return CycloNum::root_of_unity(m, k); }

CycloNum random_cyclo(std::mt19937& rng, int m)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i < euler_phi(m); ++i) {
        c.push_back(make_rational(num(rng), den(rng)));
    }
    return CycloNum::from_coeffs(m, c);
}

QSeries random_series(std::mt19937& rng, int trunc2, bool unit_constant)
{
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    QSeries s = QSeries::zero(trunc2);
    for (int e = 0; e <= trunc2; ++e) {
        s.add_term(e, make_rational(num(rng), den(rng)));
    }
    if (unit_constant) {
        s.set_term(0, Rational(1));
    }
    return s;
}

// Schoolbook product used as an oracle for Series::operator*.
QSeries naive_mul(const QSeries& a, const QSeries& b, int trunc2)
{
    QSeries out = QSeries::zero(trunc2);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cyclotomic products of roots of unity")
{
    CHECK(xi(4) * xi(4) == CycloNum(-1));
    CHECK((CycloNum(1) + xi(3)) * (-xi(3)) == CycloNum(1));
    CHECK(xi(6) * xi(6) * xi(6) == CycloNum(-1));
    CHECK(xi(12, 12) == CycloNum(1));
    CHECK(xi(8, 3) * xi(8, 5) == CycloNum(1));
}

TEST_CASE("cyclotomic inverses")
{
    CHECK((CycloNum(1) + xi(3)).inverse() == -xi(3));
    CHECK(CycloNum(2).inverse() == CycloNum(Rational(1, 2)));
    CHECK(xi(5).inverse() == xi(5, 4));
    CHECK_THROWS_AS(CycloNum::constant(7, 0).inverse(), std::domain_error);
}

TEST_CASE("cyclotomic conductor mismatch is rejected")
{
    CHECK_THROWS(xi(3) * xi(4));
    CHECK_NOTHROW(xi(3) * CycloNum(5));
}

TEST_CASE("cyclotomic field axioms on random triples")
{
    std::mt19937 rng(1234);
    for (int m : {3, 4, 5, 6, 8, 12}) {
        for (int trial = 0; trial < 12; ++trial) {
            CycloNum a = random_cyclo(rng, m);
            CycloNum b = random_cyclo(rng, m);
            CycloNum c = random_cyclo(rng, m);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycloNum::constant(m, 1));
            }
            // embedding is a ring homomorphism
            auto lhs = (a * b).to_complex();
            auto rhs = a.to_complex() * b.to_complex();
            CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
        }
    }
}

TEST_CASE("canonical form: sum of all m-th roots vanishes")
{
    for (int m : {3, 4, 5, 6, 8, 12}) {
        CycloNum sum = CycloNum::constant(m, 0);
        for (int k = 0; k < m; ++k) {
            sum += xi(m, k);
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("quadratic numbers")
{
    QuadraticNumber r = QuadraticNumber::sqrt_of(Rational(2));
    CHECK(r * r == QuadraticNumber(2));
    QuadraticNumber s = QuadraticNumber::sqrt_of(Rational(3, 2));
    CHECK(s * s == QuadraticNumber(Rational(3, 2)));
    CHECK(QuadraticNumber::sqrt_of(Rational(9, 4)) == QuadraticNumber(Rational(3, 2)));
    QuadraticNumber x = QuadraticNumber(1) + r;
    CHECK(x * x.inverse() == QuadraticNumber(1));
    CHECK(pow(r, -3) * pow(r, 3) == QuadraticNumber(1));
}

TEST_CASE("series division examples")
{
    const int T = 16;
    QSeries one_minus_q = QSeries::one(T);
    one_minus_q.add_term(2, Rational(-1));
    QSeries geo = series_div(QSeries::one(T), one_minus_q);
    for (int k = 0; k <= 8; ++k) {
        CHECK(geo.coeff(2 * k) == Rational(1));
    }
    CHECK(geo.trunc2() == T);

    QSeries num = QSeries::one(T);
    num.add_term(4, Rational(-1));
    QSeries q = series_div(num, one_minus_q);
    QSeries expect = QSeries::one(T);
    expect.add_term(2, Rational(1));
    CHECK(q == expect);

    // theta_3 at z=1 divided by itself
    QSeries th = QSeries::zero(T);
    for (int a = -4; a <= 4; ++a) {
        th.add_term(a * a, Rational(1));
    }
    CHECK(series_div(th, th) == QSeries::one(T));

    CHECK_THROWS_AS(series_div(th, QSeries::zero(T)), std::domain_error);
}

TEST_CASE("series division lowers the exponent by the divisor's lowest exponent")
{
    QSeries a = QSeries::monomial(Rational(3), 5, 20);
    QSeries b = QSeries::monomial(Rational(2), 2, 20);
    b.add_term(4, Rational(1));
    QSeries q = series_div(a, b);
    CHECK(q.low2() == 3);
    CHECK(q.coeff(3) == Rational(3, 2));
    CHECK(naive_mul(q, b, q.trunc2()).agrees_with(a, q.trunc2()));
}

TEST_CASE("series log and exp")
{
    const int T = 20;
    QSeries one_plus_q = QSeries::one(T);
    one_plus_q.add_term(2, Rational(1));
    QSeries lg = series_log(one_plus_q);
    for (int k = 1; k <= 10; ++k) {
        CHECK(lg.coeff(2 * k) == Rational(k % 2 == 1 ? 1 : -1, k));
    }
    CHECK(series_exp(QSeries::zero(T)) == QSeries::one(T));
    CHECK(series_exp(lg) == one_plus_q.truncated(T));
    CHECK_THROWS(series_log(QSeries::zero(T)));
}

TEST_CASE("series ring properties on random inputs")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const int T = 14;
        QSeries a = random_series(rng, T, true);
        QSeries b = random_series(rng, T, true);
        QSeries c = random_series(rng, T, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * b == naive_mul(a, b, T));
        CHECK(series_log(naive_mul(a, b, T)) == series_log(a) + series_log(b));
        CHECK(series_exp(series_log(a)) == a);
        CHECK(series_div(a, b) * b == a);
    }
}

TEST_CASE("series over cyclotomic coefficients")
{
    const int T = 12;
    Series<CycloNum> s = Series<CycloNum>::one(T);
    s.add_term(1, xi(6));
    s.add_term(2, xi(6, 2));
    Series<CycloNum> inv = series_inverse(s);
    CHECK(s * inv == Series<CycloNum>::one(T));
}

TEST_CASE("bivariate series inverse and monomial substitution")
{
    const int T = 10;
    QSeries one_minus = QSeries::one(T);
    one_minus.add_term(2, Rational(-1));
    auto b = BiSeries<Rational>::substitute_monomial(one_minus, 2, 2, T);  // 1 - xy
    auto inv = inverse(b);
    CHECK(inv.coeff(4, 4) == Rational(1));
    CHECK(inv.coeff(2, 0) == Rational(0));
    CHECK(b * inv == BiSeries<Rational>::one(T));
}

TEST_CASE("laurent-taylor coefficient bounds")
{
    LaurentTaylor lt(2, {3, 3}, 10);
    lt.add({-1, 0}, QSeries::one(10));
    CHECK(lt.min_exponents()[0] == -1);
    CHECK(lt.min_exponents()[1] == 0);
    CHECK(lt.coefficient({-1, 0}) == QSeries::one(10));
    CHECK_THROWS_AS(lt.coefficient({4, 0}), std::out_of_range);
}

TEST_CASE("big complex precision and embedding")
{
    PrecisionGuard guard(256);
    std::mt19937 rng(5);
    for (int m : {3, 5, 8, 12}) {
        CycloNum a = random_cyclo(rng, m);
        CycloNum b = random_cyclo(rng, m);
        BigComplex ea = BigComplex::from_cyclo(a);
        BigComplex eb = BigComplex::from_cyclo(b);
        BigComplex eab = BigComplex::from_cyclo(a * b);
        BigFloat err = (eab - ea * eb).abs();
        BigFloat scale = 1 + ea.abs() * eb.abs();
        CHECK(err / scale < pow(BigFloat(2), -248));
    }
    BigComplex z = BigComplex::root_of_unity(7, 3);
    BigComplex p(1);
    for (int i = 0; i < 7; ++i) {
        p *= z;
    }
    CHECK((p - BigComplex(1)).abs() < pow(BigFloat(2), -250));
    BigComplex sq = BigComplex(BigFloat(-4)).sqrt();
    CHECK((sq - BigComplex(BigFloat(0), BigFloat(2))).abs() < pow(BigFloat(2), -250));
}
