#include "tcore/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tcore/contour.hpp"
#include "tcore/npoint.hpp"
#include "tcore/quasimod.hpp"
#include "tcore/symfunc.hpp"
#include "tcore/theta.hpp"

namespace tcore {

namespace {

using QN = QuadraticNumber;
using ZSeries = Series<QN>;

constexpr unsigned kBits = 256;

CheckResult timed(const std::string& name, const std::function<bool(std::string&)>& body)
{
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SValue sv(long p, long q = 1) { return SValue::from_square(make_rational(p, q)); }

std::string tuple_string(const std::vector<SValue>& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + s[i].to_string();
    }
    return out + ")";
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        for (auto& p : partitions_of(k)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

BigFloat bf(long p, long q = 1) { return to_bigfloat(make_rational(p, q)); }

std::string sci(const BigFloat& x) { return x.str(3, std::ios_base::scientific); }

// ---- partitions ----

bool hook_sum_identity(std::string& detail)
{
    long count = 0;
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : partitions_of(n)) {
            long sum = 0;
            for (const auto& row : p.hook_lengths()) {
                for (int h : row) {
                    sum += h;
                }
            }
            if (sum != p.n_statistic() + p.conjugate().n_statistic() + p.size()) {
                detail = "fails at " + p.to_string();
                return false;
            }
            ++count;
        }
    }
    detail = std::to_string(count) + " partitions";
    return true;
}

bool tcore_counts(std::string& detail)
{
    std::ostringstream os;
    bool ok = true;
    for (int t = 2; t <= 6; ++t) {
        auto cores = enumerate_t_cores(t, 30);
        auto fixed = tcore_product_counts(t, t, 30);
        QSeries varying = tcore_candidate_varying(t, 30);
        int first_diff = -1;
        for (int n = 0; n <= 30; ++n) {
            const auto count = static_cast<long long>(cores[static_cast<std::size_t>(n)].size());
            ok = ok && count == fixed[static_cast<std::size_t>(n)];
            if (first_diff < 0 && Rational(static_cast<long>(count)) != varying.coeff(2 * n)) {
                first_diff = n;
            }
        }
        os << "t=" << t << ": exponent-n form ";
        os << (first_diff < 0 ? "agrees" : "differs at Q^" + std::to_string(first_diff)) << "; ";
    }
    detail = (ok ? "enumeration = prod (1-Q^{bt})^t/(1-Q^b) to Q^30; " : "enumeration mismatch; ") + os.str();
    return ok;
}

bool tcore_predicates(std::string& detail)
{
    for (int t = 2; t <= 5; ++t) {
        for (int n = 0; n <= 14; ++n) {
            for (const auto& p : partitions_of(n)) {
                bool a = is_t_core(p, t, TCoreMethod::AllHooks);
                if (a != is_t_core(p, t, TCoreMethod::HookEqualsT) || a != is_t_core(p, t, TCoreMethod::MayaPairs)) {
                    detail = "disagreement at " + p.to_string();
                    return false;
                }
            }
        }
    }
    return true;
}

bool maya_round_trip(std::uint64_t seed, std::string& detail)
{
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 31);
        auto all = partitions_of(n);
        const Partition& p = all[rng() % all.size()];
        const int lo = -p.length() - static_cast<int>(rng() % 4);
        const int hi = p.part(1) + static_cast<int>(rng() % 4);
        if (!(partition_from_maya(maya(p, lo, hi)) == p)) {
            detail = "fails at " + p.to_string();
            return false;
        }
    }
    detail = "200 random partitions";
    return true;
}

// ---- symfunc ----

bool hook_equals_jt(std::string& detail)
{
    const Rational q(2);
    SpecPoint rho(q);
    for (const auto& p : partitions_up_to(8)) {
        if (!(schur(p, rho) == schur_hook_formula(p, q))) {
            detail = "fails at " + p.to_string();
            return false;
        }
    }
    return true;
}

bool vertex_symmetry(const std::vector<Partition>& parts, const Rational& q, std::string& detail)
{
    for (const auto& a : parts) {
        for (const auto& b : parts) {
            for (const auto& c : parts) {
                QN v1 = topological_vertex(a, b, c, q);
                if (!(v1 == topological_vertex(b, c, a, q)) || !(v1 == topological_vertex(c, a, b, q))) {
                    detail = "fails at " + a.to_string() + b.to_string() + c.to_string();
                    return false;
                }
            }
        }
    }
    return true;
}

bool cauchy_identity(std::string& detail)
{
    const Rational q(2);
    const int Z = 6;
    const int T = 2 * Z;
    auto lambdas = partitions_up_to(Z);
    auto nus = partitions_up_to(4);
    ZSeries log_inf = ZSeries::zero(T);
    for (int k = 1; k <= Z; ++k) {
        Rational qk = pow(q, -k);
        Rational pk = qk / ((1 - qk) * (1 - qk));
        log_inf.add_term(2 * k, QN(pk / k * (k % 2 == 1 ? 1 : -1)));
    }
    const ZSeries inf_product = series_exp(log_inf);
    auto one_plus = [&](long exponent) {
        ZSeries f = ZSeries::one(T);
        f.add_term(2, QN(pow(q, exponent)));
        return f;
    };
    for (const auto& n1 : nus) {
        for (const auto& n2 : nus) {
            const Partition n1t = n1.conjugate();
            const Partition n2t = n2.conjugate();
            SpecPoint at1(q, n1);
            SpecPoint at2(q, n2t);
            ZSeries lhs = ZSeries::zero(T);
            for (const auto& lam : lambdas) {
                lhs.add_term(2 * lam.size(), schur(lam, at1) * schur(lam.conjugate(), at2));
            }
            ZSeries rhs = inf_product;
            for (int j = 1; j <= n1.length(); ++j) {
                for (int k = 1; k <= n1.part(j); ++k) {
                    rhs *= one_plus(n1.part(j) + n2t.part(k) - j - k + 1);
                }
            }
            for (int j = 1; j <= n2.length(); ++j) {
                for (int k = 1; k <= n2.part(j); ++k) {
                    rhs *= one_plus(-n1t.part(k) - n2.part(j) + j + k - 1);
                }
            }
            if (lhs != rhs) {
                detail = "fails at " + n1.to_string() + " " + n2.to_string();
                return false;
            }
        }
    }
    detail = "to z^6, |nu1|,|nu2| <= 4";
    return true;
}

// ---- theta ----

bool triple_products(std::uint64_t seed, std::string& detail)
{
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 6; ++trial) {
        const int m = std::vector<int>{3, 4, 5, 6, 8}[rng() % 5];
        const long k = static_cast<long>(rng() % static_cast<unsigned>(m));
        const Rational scale = make_rational(static_cast<long>(rng() % 7) + 2, static_cast<long>(rng() % 5) + 1);
        const CycloNum z = CycloNum::root_of_unity(m, k) * CycloNum(scale);
        if (!(theta3(z, 16) == theta3_product(z, 16)) || !(jacobi_j(z, 16) == jacobi_j_product(z, 16))) {
            detail = "fails at " + z.to_string();
            return false;
        }
    }
    detail = "6 random cyclotomic arguments to Q^8";
    return true;
}

bool qdeformed_z(std::string& detail)
{
    for (Rational q : {Rational(2), Rational(3, 2)}) {
        if (!(qdeformed_Z_sum(q, 6) == qdeformed_Z_product(q, 6))) {
            detail = "fails at q=" + to_string(q);
            return false;
        }
    }
    detail = "total degree 6 at q = 2, 3/2";
    return true;
}

// ---- npoint ----

bool three_routes(int t, const std::vector<SValue>& s, int threads, std::string& detail)
{
    ClosedOptions opt;
    opt.threads = threads;
    const QSeries brute = brute_force_Ft(t, s, 8, threads);
    for (const Rational& q2 : {Rational(1), Rational(2), Rational(5, 3)}) {
        if (!(closed_Ft(t, s, q2, 8, opt) == brute)) {
            detail = "closed route differs at Q2=" + to_string(q2);
            return false;
        }
    }
    if (s.size() >= 2 && !(closed_Ft_r(t, s, 1, 8, opt) == brute)) {
        detail = "theta-only route differs";
        return false;
    }
    detail = s.size() >= 2 ? "brute = closed(Q2=1,2,5/3) = closed-r(r=1)" : "brute = closed(Q2=1,2,5/3)";
    return true;
}

std::vector<SValue> three_route_tuple(int n)
{
    const std::vector<SValue> base = {sv(4), sv(9, 4), sv(25, 16)};
    return {base.begin(), base.begin() + n};
}

bool degenerate_tuples(std::string& detail)
{
    const std::vector<SValue> s = {sv(4), sv(9, 4)};
    ClosedOptions all;
    all.all_tuples = true;
    const bool ok = closed_Ft_cyclo(3, s, Rational(1), 6, all) == closed_Ft_cyclo(3, s, Rational(1), 6) &&
                    closed_Ft_cyclo(3, s, Rational(2), 6, all) == closed_Ft_cyclo(3, s, Rational(2), 6);
    detail = "t=3, n=2, Q^6, Q2 = 1, 2";
    return ok;
}

bool two_core_expansion(std::string& detail)
{
    for (const SValue& v : {sv(4), sv(9, 4), sv(25, 16)}) {
        const Rational& s = v.s;
        const Rational& u = v.sqrt_s;
        const Rational u3 = u * u * u;
        const Rational u5 = u3 * u * u;
        const std::vector<Rational> c = {
            u / (s - 1),
            (s - 1) / u,
            -(s - 1) / u,
            (s - 1) * (s + 1) * (s + 1) / u3,
            -(s - 1) * (s * s + 3 * s + 1) / u3,
            (s - 1) * (s * s + 4 * s + 1) / u3,
            (s - 1) * (s * s - 3 * s + 1) * (s + 1) * (s + 1) / u5,
        };
        QSeries expect = QSeries::zero(12);
        for (int k = 0; k <= 6; ++k) {
            expect.add_term(2 * k, c[static_cast<std::size_t>(k)]);
        }
        if (!(brute_force_Ft(2, {v}, 6).truncated(12) == expect)) {
            detail = "fails at s=" + v.to_string();
            return false;
        }
    }
    detail = "7 coefficients at s = 4, 9/4, 25/16";
    return true;
}

// ---- contour ----

QuadratureConfig contour_config(int digits, int threads)
{
    QuadratureConfig cfg;
    cfg.precision_bits = kBits;
    cfg.target_digits = digits;
    cfg.threads = threads;
    return cfg;
}

bool contour_vs_exact(int threads, std::string& detail)
{
    PrecisionGuard g(kBits);
    const BigFloat tol = pow(BigFloat(10), -20);
    std::ostringstream os;
    bool ok = true;
    auto record = [&](const std::string& tag, const TorusResult& r, const BigComplex& exact) {
        const BigFloat err = (r.value - exact).abs();
        ok = ok && r.converged && err < tol;
        os << tag << " M=" << r.M << " err=" << sci(err) << (r.converged ? "" : " (not converged)") << "; ";
    };
    {
        const BigFloat Q = bf(1, 10);
        const BigComplex exact = evaluate_series(brute_force_Ft(2, {sv(4)}, 40, threads), BigComplex(Q));
        record("n=1 product", extract_theta_product(2, {bf(4)}, Q, contour_config(22, threads)), exact);
        record("n=1 det", extract_theta3_det(2, {bf(4)}, Q, bf(1), contour_config(22, threads)), exact);
    }
    {
        const BigFloat Q = bf(1, 20);
        const std::vector<SValue> s = {sv(4), sv(9, 4)};
        ClosedOptions opt;
        opt.threads = threads;
        const BigComplex exact = evaluate_series(closed_Ft(3, s, Rational(1), 30, opt), BigComplex(Q));
        record("n=2 product", extract_theta_product(3, {bf(4), bf(9, 4)}, Q, contour_config(20, threads)), exact);
        record("n=2 det", extract_theta3_det(3, {bf(4), bf(9, 4)}, Q, bf(1), contour_config(20, threads)), exact);
    }
    detail = os.str();
    return ok;
}

bool bloch_okounkov(int threads, std::string& detail)
{
    PrecisionGuard g(kBits);
    const BigFloat Q = bf(1, 10);
    const BigComplex exact = evaluate_series(bloch_okounkov_one_point(sv(4), 60), BigComplex(Q));
    auto r = extract_bo({bf(4)}, Q, bf(1), contour_config(22, threads));
    const BigFloat err = (r.value - exact).abs();
    detail = "s=4 M=" + std::to_string(r.M) + " err=" + sci(err);
    return r.converged && err < pow(BigFloat(10), -20);
}

// ---- quasimod ----

bool two_core_identity(std::string& detail)
{
    detail = "z^8, Q^12";
    return check_2core_identity(8, 12);
}

bool quasimodular_targets(int threads, std::string& detail)
{
    std::ostringstream os;
    bool ok = true;
    for (int t : {2, 3}) {
        const WeightedBasis b = build_basis(t, 2, 30, threads);
        const QSeries f2 = correlation_expansion(t, 1, {2}, 30).coefficient({1});
        const QSeries f11 = correlation_expansion(t, 2, {1, 1}, 30).coefficient({0, 0});
        for (const auto& [name, target] : {std::pair{"<f2>", f2}, std::pair{"<f1f1>", f11}}) {
            auto r = membership_solve(target, b, 20, 30);
            ok = ok && r.status == MembershipStatus::Accept;
            os << "t=" << t << " " << name << " " << status_name(r.status) << "; ";
        }
        // f_1 vanishes identically, so <f1f1> = 0 is accepted trivially; weight 3 and 4 targets are not
        const QSeries f3 = correlation_expansion(t, 1, {3}, 30).coefficient({2});
        const QSeries f22 = correlation_expansion(t, 2, {2, 2}, 30).coefficient({1, 1});
        for (const auto& [name, w, target] : {std::tuple{"<f3>", 3, f3}, std::tuple{"<f2f2>", 4, f22}}) {
            auto r = membership_solve(target, build_basis(t, w, 30, threads), 20, 30);
            ok = ok && r.status == MembershipStatus::Accept;
            os << "t=" << t << " " << name << " " << status_name(r.status) << " (rank " << r.rank << "); ";
        }
    }
    const WeightedBasis b2 = build_basis(2, 2, 30, threads);
    QSeries control = QSeries::zero(60);
    for (int n = 1; 3 * n * n <= 30; ++n) {
        control.add_term(6 * n * n, Rational(1));
    }
    auto neg = membership_solve(control, b2, 20, 30);
    QSeries padded = correlation_expansion(2, 1, {2}, 30).coefficient({1});
    padded.add_term(50, Rational(1));
    auto pad = membership_solve(padded, b2, 20, 30);
    ok = ok && neg.status == MembershipStatus::Reject && pad.status == MembershipStatus::Reject && pad.failing_index == 25;
    os << "control " << status_name(neg.status) << " at Q^" << neg.failing_index.value_or(-1) << ", padded control "
       << status_name(pad.status) << " at Q^" << pad.failing_index.value_or(-1);
    detail = os.str();
    return ok;
}

}  // namespace

bool SuiteReport::pass() const
{
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"partitions", "symfunc", "theta", "npoint-routes", "contour", "quasimod"};
    return names;
}

QSeries tcore_candidate_varying(int t, int max_size)
{
    const int T = 2 * max_size;
    QSeries out = QSeries::one(T);
    for (int b = 1; b <= max_size; ++b) {
        QSeries num = QSeries::one(T);
        num.add_term(2 * b * t, Rational(-1));
        QSeries den = QSeries::one(T);
        den.add_term(2 * b, Rational(-1));
        out *= series_pow(num.truncated(T), b);
        out *= series_inverse(den);
    }
    return out;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int threads)
{
    SuiteReport rep;
    rep.suite = name;
    auto& c = rep.checks;
    if (name == "partitions") {
        c.push_back(timed("sum of hooks = n(nu) + n(nu^t) + |nu|, |nu| <= 12", hook_sum_identity));
        c.push_back(timed("t-core predicates agree, t = 2..5, |nu| <= 14", tcore_predicates));
        c.push_back(timed("maya round trip", [&](std::string& d) { return maya_round_trip(seed, d); }));
        c.push_back(timed("t-core counts, t = 2..6", tcore_counts));
    } else if (name == "symfunc") {
        c.push_back(timed("hook formula = Jacobi-Trudi, |lambda| <= 8", hook_equals_jt));
        c.push_back(timed("vertex cyclic symmetry, sizes <= 3", [](std::string& d) {
            return vertex_symmetry(partitions_up_to(3), Rational(2), d);
        }));
        c.push_back(timed("vertex cyclic symmetry, random triples at q = 3/2", [&](std::string& d) {
            std::mt19937_64 rng(seed);
            auto all = partitions_up_to(4);
            std::vector<Partition> pick;
            for (int i = 0; i < 4; ++i) {
                pick.push_back(all[rng() % all.size()]);
            }
            return vertex_symmetry(pick, Rational(3, 2), d);
        }));
        c.push_back(timed("Cauchy-type identity with shifts", cauchy_identity));
    } else if (name == "theta") {
        c.push_back(timed("triple products", [&](std::string& d) { return triple_products(seed, d); }));
        c.push_back(timed("log theta ratio for 2-cores", two_core_identity));
        c.push_back(timed("q-deformed Z: sum = product", qdeformed_z));
    } else if (name == "npoint-routes") {
        c.push_back(timed("2-core expansion to Q^6", two_core_expansion));
        for (int t = 2; t <= 4; ++t) {
            for (int n = 1; n <= 3; ++n) {
                auto s = three_route_tuple(n);
                c.push_back(timed("routes t=" + std::to_string(t) + " s=" + tuple_string(s),
                                  [&](std::string& d) { return three_routes(t, s, threads, d); }));
            }
        }
        std::mt19937_64 rng(seed);
        const std::vector<SValue> pool = {sv(4), sv(9, 4), sv(25, 16), sv(16, 9), sv(9)};
        for (int trial = 0; trial < 2; ++trial) {
            const int t = 2 + static_cast<int>(rng() % 2);
            std::vector<SValue> s = {pool[rng() % pool.size()], pool[rng() % pool.size()]};
            c.push_back(timed("routes t=" + std::to_string(t) + " s=" + tuple_string(s) + " (seeded)",
                              [&](std::string& d) { return three_routes(t, s, threads, d); }));
        }
        c.push_back(timed("repeated-index tuples", degenerate_tuples));
    } else if (name == "contour") {
        c.push_back(timed("contour vs exact", [&](std::string& d) { return contour_vs_exact(threads, d); }));
        c.push_back(timed("Bloch-Okounkov determinant", [&](std::string& d) { return bloch_okounkov(threads, d); }));
    } else if (name == "quasimod") {
        c.push_back(timed("log theta ratio for 2-cores", two_core_identity));
        c.push_back(timed("membership", [&](std::string& d) { return quasimodular_targets(threads, d); }));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return rep;
}

CheckResult acceptance_criterion(int k, int threads)
{
    switch (k) {
        case 1:
            return timed("2-core expansion to Q^6", two_core_expansion);
        case 2:
            return timed("t-core counting", tcore_counts);
        case 3:
            return timed("three-route equality", [&](std::string& d) {
                for (int t = 2; t <= 4; ++t) {
                    for (int n = 1; n <= 3; ++n) {
                        if (!three_routes(t, three_route_tuple(n), threads, d)) {
                            d = "t=" + std::to_string(t) + " n=" + std::to_string(n) + ": " + d;
                            return false;
                        }
                    }
                }
                d = "t = 2..4, n = 1..3, Q^8, Q2 = 1, 2, 5/3, r = 1";
                return true;
            });
        case 4:
            return timed("contour extraction vs exact series", [&](std::string& d) { return contour_vs_exact(threads, d); });
        case 5:
            return timed("q-deformed partition function", qdeformed_z);
        case 6:
            return timed("symmetric-function layer", [](std::string& d) {
                std::string part;
                if (!hook_equals_jt(part)) {
                    d = "hook/JT " + part;
                    return false;
                }
                if (!vertex_symmetry(partitions_up_to(3), Rational(2), part)) {
                    d = "vertex " + part;
                    return false;
                }
                if (!cauchy_identity(part)) {
                    d = "Cauchy " + part;
                    return false;
                }
                if (!hook_sum_identity(part)) {
                    d = "hook sum " + part;
                    return false;
                }
                d = "hook/JT |lambda|<=8, vertex sizes<=3, Cauchy z^6, hook sum |nu|<=12";
                return true;
            });
        case 7:
            return timed("Eisenstein identity", two_core_identity);
        case 8:
            return timed("quasimodularity evidence", [&](std::string& d) { return quasimodular_targets(threads, d); });
        case 9:
            return timed("repeated-index tuple invariance", degenerate_tuples);
        case 10:
            return timed("Bloch-Okounkov limit", [&](std::string& d) { return bloch_okounkov(threads, d); });
        default:
            throw std::invalid_argument("criteria are numbered 1..10");
    }
}

}  // namespace tcore
