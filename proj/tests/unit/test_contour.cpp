#include <doctest.h>

#include "tcore/contour.hpp"
#include "tcore/npoint.hpp"

using namespace tcore;

namespace {

constexpr unsigned kBits = 256;

BigFloat bf(long p, long q = 1) { return to_bigfloat(Rational(p, q)); }

bool close(const BigComplex& a, const BigComplex& b, const BigFloat& tol) { return (a - b).abs() < tol; }

BigFloat ten(int e) { return pow(BigFloat(10), e); }

QuadratureConfig config(int digits, int m_max = 1024)
{
    QuadratureConfig cfg;
    cfg.precision_bits = kBits;
    cfg.target_digits = digits;
    cfg.m_max = m_max;
    return cfg;
}

}  // namespace

TEST_CASE("numeric theta: product and sum forms agree with the exact series")
{
    PrecisionGuard g(kBits);
    const BigComplex Q(bf(1, 50));
    for (const CycloNum& root : {CycloNum(Rational(3, 2)), CycloNum::root_of_unity(6, 1) * CycloNum(2)}) {
        BigComplex r = BigComplex::from_cyclo(root);
        BigComplex z = r * r;
        BigComplex a = theta_numeric(z, r, Q, kBits);
        CHECK(close(a, theta_numeric_sum(z, r, Q, kBits), ten(-70)));
        // the Q^40 truncation leaves an error of order (|z|/50)^41
        CSeries exact = vartheta(ThetaArg::from_sqrt(root), 80);
        CHECK(close(a, evaluate_series(exact, Q), ten(-40)));
    }
    CycloNum z = CycloNum::root_of_unity(5, 2) * CycloNum(Rational(-7, 3));
    CHECK(close(theta3_numeric(BigComplex::from_cyclo(z), Q.sqrt(), kBits), evaluate_series(theta3(z, 80), Q), ten(-60)));
}

TEST_CASE("torus quadrature basics")
{
    PrecisionGuard g(kBits);
    QuadratureConfig cfg = config(20, 64);
    cfg.radii = {bf(2)};
    auto r = torus_extract(1, [](const std::vector<BigComplex>&) { return BigComplex(BigFloat(1)); }, cfg, bf(1, 10), {});
    CHECK(close(r.value, BigComplex(BigFloat(1)), ten(-70)));

    cfg.m_start = 2;
    cfg.m_max = 2;
    auto lp = torus_extract(
        1, [](const std::vector<BigComplex>& w) { return w[0] + BigComplex(BigFloat(3)) + w[0].inverse(); }, cfg, bf(1, 10), {});
    CHECK(close(lp.value, BigComplex(BigFloat(3)), ten(-70)));

    // 1/(1 - w/R) on |w| = 2, R = 5: error 2 (2/5)^M
    cfg.m_start = 64;
    cfg.m_max = 64;
    auto geo = torus_extract(
        1, [](const std::vector<BigComplex>& w) { return (BigComplex(BigFloat(1)) - w[0] * bf(1, 5)).inverse(); }, cfg, bf(1, 10), {});
    CHECK(close(geo.value, BigComplex(BigFloat(1)), 2 * pow(bf(2, 5), 64)));
}

TEST_CASE("region radii")
{
    PrecisionGuard g(kBits);
    std::vector<BigFloat> s = {bf(4), bf(9, 4)};
    auto c = region_radii(s, bf(1, 20));
    CHECK_NOTHROW(check_region(c, s, bf(1, 20)));
    CHECK(c[1] > 1);
    CHECK(c[0] > c[1] * s[1]);
    CHECK(c[0] * s[0] * bf(1, 20) < 1);
    CHECK_THROWS(region_radii({bf(30)}, bf(1, 20)));
    CHECK_THROWS(check_region({bf(2), bf(3)}, s, bf(1, 20)));
}

TEST_CASE("grid integrands match the pointwise evaluators")
{
    PrecisionGuard g(kBits);
    const std::vector<BigFloat> s = {bf(4), bf(9, 4)};
    const BigFloat Q = bf(1, 20);
    QuadratureConfig cfg = config(20, 16);
    cfg.m_start = 16;
    const BigFloat q2 = bf(2, 3);
    auto pprod = torus_extract(2, [&](const std::vector<BigComplex>& w) { return eval_theta_product(3, s, Q, w, kBits); }, cfg, Q, s);
    CHECK(close(pprod.value, extract_theta_product(3, s, Q, cfg).value, ten(-60)));
    auto pdet = torus_extract(2, [&](const std::vector<BigComplex>& w) { return eval_theta3_det(3, s, Q, q2, w, kBits); }, cfg, Q, s);
    CHECK(close(pdet.value, extract_theta3_det(3, s, Q, q2, cfg).value, ten(-60)));
    auto pbo = torus_extract(2, [&](const std::vector<BigComplex>& w) { return eval_bo_determinant(s, Q, q2, w, kBits); }, cfg, Q, s);
    CHECK(close(pbo.value, extract_bo(s, Q, q2, cfg).value, ten(-60)));
}

TEST_CASE("one-point extraction against the exact path")
{
    PrecisionGuard g(kBits);
    const std::vector<BigFloat> s = {bf(4)};
    const BigFloat Q = bf(1, 10);
    BigComplex exact = evaluate_series(brute_force_Ft(2, {SValue::from_square(Rational(4))}, 40), BigComplex(Q));
    auto rprod = extract_theta_product(2, s, Q, config(25));
    CHECK(rprod.converged);
    CHECK(close(rprod.value, exact, ten(-25)));
    CHECK(abs(rprod.value.imag()) < ten(-25));
    for (auto q2 : {bf(1, 2), bf(1), bf(2)}) {
        auto rdet = extract_theta3_det(2, s, Q, q2, config(25));
        CHECK(rdet.converged);
        CHECK(close(rdet.value, rprod.value, ten(-25)));
    }
}

TEST_CASE("two-point extraction for 3-cores")
{
    PrecisionGuard g(kBits);
    const std::vector<BigFloat> s = {bf(4), bf(9, 4)};
    const BigFloat Q = bf(1, 20);
    const std::vector<SValue> sv = {SValue::from_square(Rational(4)), SValue::from_square(Rational(9, 4))};
    BigComplex exact = evaluate_series(closed_Ft(3, sv, Rational(1), 30), BigComplex(Q));
    CHECK(abs(exact.real() - BigFloat("1.0591739296")) < ten(-10));
    auto rdet = extract_theta3_det(3, s, Q, bf(1), config(20));
    CHECK(rdet.converged);
    CHECK(close(rdet.value, exact, ten(-20)));
    auto rprod = extract_theta_product(3, s, Q, config(20));
    CHECK(rprod.converged);
    CHECK(close(rprod.value, exact, ten(-20)));
}

TEST_CASE("Bloch-Okounkov determinant")
{
    PrecisionGuard g(kBits);
    const SValue s4 = SValue::from_square(Rational(4));
    CHECK(bloch_okounkov_one_point(s4, 12) == bloch_okounkov_F({s4}, 12));
    const BigFloat Q = bf(1, 10);
    BigComplex exact = evaluate_series(bloch_okounkov_one_point(s4, 60), BigComplex(Q));
    for (auto q2 : {bf(1, 2), bf(1), bf(3)}) {
        auto r = extract_bo({bf(4)}, Q, q2, config(22));
        CHECK(r.converged);
        CHECK(close(r.value, exact, ten(-22)));
    }
}

TEST_CASE("precision doubling and small-Q limit")
{
    QuadratureConfig lo = config(15, 256);
    lo.precision_bits = 128;
    QuadratureConfig hi = config(15, 256);
    hi.precision_bits = 256;
    PrecisionGuard g(256);
    auto a = extract_theta_product(3, {bf(9, 4)}, bf(1, 10), lo);
    auto b = extract_theta_product(3, {bf(9, 4)}, bf(1, 10), hi);
    CHECK(close(a.value, b.value, ten(-15)));
    // tiny Q leaves the empty-partition term sqrt(s)/(s-1)
    auto c = extract_bo({bf(4)}, ldexp(BigFloat(1), -200), bf(1), config(15, 256));
    CHECK(close(c.value, BigComplex(bf(2, 3)), ten(-15)));
}
