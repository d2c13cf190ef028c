#include <doctest.h>

#include "tcore/npoint.hpp"
#include "tcore/quasimod.hpp"

using namespace tcore;

namespace {

constexpr int kFit = 20;
constexpr int kCheck = 30;

QSeries f2_target(int t, int N) { return correlation_expansion(t, 1, {2}, N).coefficient({1}); }

QSeries f1f1_target(int t, int N) { return correlation_expansion(t, 2, {1, 1}, N).coefficient({0, 0}); }

CSeries combine(const WeightedBasis& b, const std::vector<CycloNum>& c)
{
    CSeries out = CSeries::zero(2 * b.N);
    for (std::size_t m = 0; m < c.size(); ++m) {
        out += b.expansions[m].scaled(c[m]);
    }
    return out;
}

}  // namespace

TEST_CASE("basis generators and monomials")
{
    auto b0 = build_basis(2, 0, 10);
    REQUIRE(b0.monomials.size() == 1);
    CHECK(b0.monomials[0].name(b0.generators) == "1");

    auto b = build_basis(2, 2, 10);
    std::vector<std::string> names;
    for (const auto& g : b.generators) {
        names.push_back(g.name());
    }
    CHECK(names == std::vector<std::string>{"E_2(Q)", "E_2(Q^2)", "E^1_1", "E^1_2"});
    // 1, E^1_1, E_2(Q), E_2(Q^2), E^1_1^2, E^1_2
    CHECK(b.monomials.size() == 6);

    auto b3 = build_basis(3, 4, 4);
    CHECK(b3.generators.size() == 12);
    CHECK(b3.monomials.size() == 59);
    CHECK_THROWS(build_basis(1, 2, 4));
    CHECK_THROWS(build_basis(2, -1, 4));
}

TEST_CASE("E_2 is recovered as a unit vector")
{
    auto b = build_basis(2, 2, kCheck);
    auto r = membership_solve(eisenstein(1, kCheck), b, kFit, kCheck);
    REQUIRE(r.status == MembershipStatus::Accept);
    // E^1_1 vanishes for 2-cores and E^1_2 is a combination of E_2(Q), E_2(Q^2)
    std::vector<std::string> dropped;
    for (auto m : r.dropped) {
        dropped.push_back(b.monomials[m].name(b.generators));
    }
    CHECK(dropped == std::vector<std::string>{"E^1_1", "E^1_1^2", "E^1_2"});
    for (std::size_t m = 0; m < b.monomials.size(); ++m) {
        const bool is_e2 = b.monomials[m].name(b.generators) == "E_2(Q)";
        CHECK(r.coeffs[m] == CycloNum(is_e2 ? 1 : 0));
    }
}

TEST_CASE("2-core log theta identity")
{
    CHECK(check_2core_identity(8, 12));
    CHECK(check_2core_identity(10, 6));
    CHECK_THROWS(check_2core_identity(3, 4));
}

TEST_CASE("one- and two-point functions are quasimodular")
{
    for (int t : {2, 3}) {
        CAPTURE(t);
        auto b = build_basis(t, 2, kCheck);
        // f_1 vanishes on every partition, so <f1f1> is zero; <f3> and <f2f2> are the non-trivial checks
        CHECK(f1f1_target(t, kCheck).is_zero_series());
        const QSeries f3 = correlation_expansion(t, 1, {3}, kCheck).coefficient({2});
        const QSeries f22 = correlation_expansion(t, 2, {2, 2}, kCheck).coefficient({1, 1});
        for (const auto& [w, target] : {std::pair{3, f3}, std::pair{4, f22}}) {
            auto bw = build_basis(t, w, kCheck);
            auto r = membership_solve(target, bw, kFit, kCheck);
            CHECK(r.status == MembershipStatus::Accept);
            CHECK(combine(bw, r.coeffs) == target.map_coeffs([](const Rational& q) { return CycloNum(q); }).truncated(2 * kCheck));
            for (std::size_t m = 0; m < bw.monomials.size(); ++m) {
                CHECK((bw.monomials[m].weight <= w || r.coeffs[m].is_zero()));
            }
        }
        for (const QSeries& target : {f2_target(t, kCheck), f1f1_target(t, kCheck)}) {
            auto r = membership_solve(target, b, kFit, kCheck);
            CHECK(r.status == MembershipStatus::Accept);
            CHECK(combine(b, r.coeffs) == target.map_coeffs([](const Rational& q) { return CycloNum(q); }).truncated(2 * kCheck));
        }
    }
}

TEST_CASE("known 2-core one-point coefficients")
{
    auto b = build_basis(2, 2, kCheck);
    auto r = membership_solve(f2_target(2, kCheck), b, kFit, kCheck);
    REQUIRE(r.status == MembershipStatus::Accept);
    for (std::size_t m = 0; m < b.monomials.size(); ++m) {
        const std::string n = b.monomials[m].name(b.generators);
        CycloNum expect(0);
        if (n == "1") {
            expect = CycloNum(Rational(-1, 6));
        } else if (n == "E_2(Q)") {
            expect = CycloNum(1);
        } else if (n == "E_2(Q^2)") {
            expect = CycloNum(-4);
        }
        CHECK_MESSAGE(r.coeffs[m] == expect, n);
    }
}

TEST_CASE("non-quasimodular targets are rejected")
{
    auto b = build_basis(2, 2, kCheck);
    QSeries theta = QSeries::zero(2 * kCheck);
    for (int n = 1; 3 * n * n <= kCheck; ++n) {
        theta.add_term(2 * 3 * n * n, Rational(1));
    }
    auto r = membership_solve(theta, b, kFit, kCheck);
    CHECK(r.status == MembershipStatus::Reject);
    REQUIRE(r.failing_index.has_value());
    CHECK(*r.failing_index <= kCheck);

    // fits every row up to fit_N and breaks only in the check range
    QSeries padded = f2_target(2, kCheck);
    padded.add_term(2 * 25, Rational(1));
    auto p = membership_solve(padded, b, kFit, kCheck);
    CHECK(p.status == MembershipStatus::Reject);
    CHECK(p.failing_index == 25);
}

TEST_CASE("too few fit rows is underdetermined")
{
    auto b = build_basis(3, 2, kCheck);
    auto r = membership_solve(f2_target(3, kCheck), b, 1, kCheck);
    CHECK(r.status == MembershipStatus::Underdetermined);
    CHECK_THROWS(membership_solve(f2_target(3, kCheck), b, kFit, kCheck + 1));
}

TEST_CASE("expansions reach the requested order when d does not divide N")
{
    auto b = build_basis(4, 4, 30);
    for (const auto& e : b.expansions) {
        CHECK((e.is_exact() || e.trunc2() >= 60));
    }
    auto r = membership_solve(correlation_expansion(4, 1, {3}, 30).coefficient({2}), build_basis(4, 3, 30), kFit, kCheck);
    CHECK(r.status == MembershipStatus::Accept);
}

TEST_CASE("threaded basis matches serial")
{
    auto a = build_basis(3, 3, 12, 1);
    auto c = build_basis(3, 3, 12, 3);
    REQUIRE(a.expansions.size() == c.expansions.size());
    for (std::size_t m = 0; m < a.expansions.size(); ++m) {
        CHECK(a.expansions[m] == c.expansions[m]);
    }
}
