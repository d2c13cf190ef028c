#include <doctest.h>

#include "tcore/json_io.hpp"

using namespace tcore;

namespace {

RunConfig npoint_config()
{
    RunConfig c;
    c.command = "npoint";
    c.t = 3;
    c.n = 2;
    c.s = {"4", "9/4"};
    c.order = 6;
    c.method = "closed";
    return c;
}

}  // namespace

TEST_CASE("run config round trip")
{
    RunConfig c = npoint_config();
    c.Q2 = "5/3";
    c.r = 1;
    c.Q = "1/20";
    c.seed = 7;
    c.threads = 3;
    c.all_tuples = true;
    const json j = to_json(c);
    const RunConfig back = run_config_from_json(json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.s == c.s);
    CHECK(back.Q2 == c.Q2);
    CHECK(back.seed == 7);
}

TEST_CASE("config validation")
{
    CHECK_NOTHROW(validate(npoint_config()));
    RunConfig c = npoint_config();
    c.method = "contour";
    c.n = 4;
    c.s = {"4", "4", "4", "4"};
    c.Q = "1/100";
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = npoint_config();
    c.method = "contour";
    CHECK_THROWS_AS(validate(c), ConfigError);  // no Q
    c.Q = "1/20";
    CHECK_NOTHROW(validate(c));
    c.Q = "3/2";
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = npoint_config();
    c.s = {"2", "9/4"};
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = npoint_config();
    c.s = {"4"};
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = npoint_config();
    c.method = "closed-r";
    c.r = 2;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.r = 1;
    CHECK_NOTHROW(validate(c));
    c = npoint_config();
    c.method = "fast";
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = npoint_config();
    c.format = "xml";
    CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("series serialization")
{
    QSeries f = QSeries::zero(8);
    f.add_term(0, Rational(2, 3));
    f.add_term(3, Rational(-5));
    f.add_term(8, make_rational(7, 16));
    const json j = to_json(f);
    CHECK(j["order2"] == 8);
    CHECK(j["terms"][1]["exp2"] == 3);
    CHECK(j["terms"][1]["coeff"] == "-5");
    CHECK(qseries_from_json(j) == f);
    CHECK(to_csv(f) == "exp2,coeff\n0,2/3\n3,-5\n8,7/16\n");

    CHECK(to_json(CycloNum(Rational(1, 2))) == "1/2");
    const json c = to_json(CycloNum::root_of_unity(3, 1));
    CHECK(c["conductor"] == 3);
    CHECK(c["coeffs"] == json::array({"0", "1"}));
}

TEST_CASE("membership report shape")
{
    auto basis = build_basis(2, 2, 12);
    auto r = membership_solve(eisenstein(1, 12), basis, 8, 12);
    const json j = membership_report("E_2", basis, r);
    for (const char* key : {"target", "weight", "monomials", "coeffs", "fit_N", "check_N", "status"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["status"] == "accept");
    CHECK(j["coeffs"].size() == j["monomials"].size());
}

TEST_CASE("torus result shape")
{
    PrecisionGuard g(128);
    TorusResult r;
    r.value = BigComplex(BigFloat(1) / 3);
    r.M = 64;
    r.converged = true;
    r.est_error = BigFloat("1e-30");
    r.precision_bits = 128;
    const json j = to_json(r);
    for (const char* key : {"value_re", "value_im", "M", "precision_bits", "converged", "est_error"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["value_re"].get<std::string>().rfind("3.333333333", 0) == 0);
}
