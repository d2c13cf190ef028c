#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tcore/contour.hpp"
#include "tcore/json_io.hpp"
#include "tcore/npoint.hpp"
#include "tcore/quasimod.hpp"
#include "tcore/verify.hpp"

using namespace tcore;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;
constexpr int kExitNoConvergence = 4;

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

unsigned default_precision()
{
    if (const char* env = std::getenv("TCORE_PRECISION_BITS")) {
        try {
            const long v = std::stol(env);
            if (v >= 64 && v <= 1 << 16) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        throw ConfigError(std::string("TCORE_PRECISION_BITS must be an integer in 64..65536, got '") + env + "'");
    }
    return 256;
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<int> split_ints(const std::string& text)
{
    std::vector<int> out;
    for (const auto& x : split(text)) {
        try {
            out.push_back(std::stoi(x));
        } catch (const std::exception&) {
            throw ConfigError("expected a comma-separated list of integers, got '" + text + "'");
        }
    }
    return out;
}

Rational rational_arg(const std::string& name, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw ConfigError("--" + name + " expects an exact rational 'p/q', got '" + text + "'");
    }
}

std::vector<BigFloat> bigfloat_list(const std::vector<std::string>& items)
{
    std::vector<BigFloat> out;
    for (const auto& x : items) {
        out.push_back(to_bigfloat(rational_arg("s", x)));
    }
    return out;
}

void emit_series(const QSeries& f, json envelope, const std::string& format, std::ostream& out)
{
    if (format == "csv") {
        out << to_csv(f);
    } else if (format == "pretty") {
        for (auto it = envelope.begin(); it != envelope.end(); ++it) {
            if (it.key() != "series") {
                out << it.key() << ": " << it.value().dump() << '\n';
            }
        }
        f.for_each_term([&](int e, const Rational& c) {
            out << "  Q^" << (e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2") << "  " << to_string(c) << '\n';
        });
    } else {
        envelope["series"] = to_json(f);
        out << envelope.dump(2) << '\n';
    }
}

int emit_torus(const TorusResult& r, json envelope, const std::string& format, std::ostream& out)
{
    json tj = to_json(r);
    for (auto it = tj.begin(); it != tj.end(); ++it) {
        envelope[it.key()] = it.value();
    }
    if (format == "pretty") {
        for (auto it = envelope.begin(); it != envelope.end(); ++it) {
            out << it.key() << ": " << it.value().dump() << '\n';
        }
    } else if (format == "csv") {
        out << "value_re,value_im,M,precision_bits,converged,est_error\n"
            << tj["value_re"].get<std::string>() << ',' << tj["value_im"].get<std::string>() << ',' << r.M << ','
            << r.precision_bits << ',' << (r.converged ? "true" : "false") << ',' << tj["est_error"].get<std::string>() << '\n';
    } else {
        out << envelope.dump(2) << '\n';
    }
    return r.converged ? 0 : kExitNoConvergence;
}

void strip_timing(json& j)
{
    if (j.is_object()) {
        j.erase("elapsed_ms");
        j.erase("ms");
        for (auto& [k, v] : j.items()) {
            strip_timing(v);
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            strip_timing(v);
        }
    }
}

// ---- commands ----

int cmd_count_tcores(int t, int max_size, const std::string& format, std::ostream& out)
{
    if (t < 2) {
        throw ConfigError("t must be >= 2");
    }
    if (max_size < 0 || max_size > 60) {
        throw ConfigError("--max must lie in 0..60");
    }
    const auto cores = enumerate_t_cores(t, max_size);
    const auto fixed = tcore_product_counts(t, t, max_size);
    const QSeries varying = tcore_candidate_varying(t, max_size);
    json rows = json::array();
    bool all_fixed = true;
    bool all_varying = true;
    for (int n = 0; n <= max_size; ++n) {
        const auto count = static_cast<long long>(cores[static_cast<std::size_t>(n)].size());
        const Rational v = varying.coeff(2 * n);
        const bool mf = count == fixed[static_cast<std::size_t>(n)];
        const bool mv = Rational(static_cast<long>(count)) == v;
        all_fixed = all_fixed && mf;
        all_varying = all_varying && mv;
        rows.push_back({{"size", n},
                        {"enumerated", count},
                        {"product_exponent_t", fixed[static_cast<std::size_t>(n)]},
                        {"product_exponent_n", to_string(v)},
                        {"match_exponent_t", mf},
                        {"match_exponent_n", mv}});
    }
    json report = {{"t", t},
                   {"max_size", max_size},
                   {"candidates",
                    {{"exponent_t", "prod_n (1-Q^{tn})^t/(1-Q^n)"}, {"exponent_n", "prod_n (1-Q^{tn})^n/(1-Q^n)"}}},
                   {"rows", rows},
                   {"verdict", {{"exponent_t", all_fixed ? "match" : "mismatch"}, {"exponent_n", all_varying ? "match" : "mismatch"}}}};
    if (format == "json") {
        out << report.dump(2) << '\n';
    } else if (format == "csv") {
        out << "size,enumerated,product_exponent_t,product_exponent_n,match_exponent_t,match_exponent_n\n";
        for (const auto& r : rows) {
            out << r["size"] << ',' << r["enumerated"] << ',' << r["product_exponent_t"] << ','
                << r["product_exponent_n"].get<std::string>() << ',' << r["match_exponent_t"] << ',' << r["match_exponent_n"]
                << '\n';
        }
    } else {
        out << "size  enumerated  exp-t  exp-n\n";
        for (const auto& r : rows) {
            out << std::setw(4) << r["size"].get<int>() << std::setw(12) << r["enumerated"].get<long long>() << std::setw(7)
                << r["product_exponent_t"].get<long long>() << std::setw(7) << r["product_exponent_n"].get<std::string>()
                << '\n';
        }
        out << "verdict: exponent t " << report["verdict"]["exponent_t"].get<std::string>() << ", exponent n "
            << report["verdict"]["exponent_n"].get<std::string>() << '\n';
    }
    return 0;
}

int cmd_npoint(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg);
    const NPointMethod method = parse_method(cfg.method);
    std::vector<SValue> s;
    for (const auto& x : cfg.s) {
        s.push_back(SValue::from_square(parse_rational(x)));
    }
    NPointResult res;
    res.method = method;
    res.t = cfg.t;
    res.s = s;
    res.order = cfg.order;
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); };
    ClosedOptions opt;
    opt.threads = cfg.threads;
    opt.all_tuples = cfg.all_tuples;
    switch (method) {
        case NPointMethod::Brute:
            res.value = brute_force_Ft(cfg.t, s, cfg.order, cfg.threads);
            break;
        case NPointMethod::Closed:
            res.Q2 = cfg.Q2 ? parse_rational(*cfg.Q2) : Rational(1);
            res.value = cfg.n == 0 ? QSeries::one(2 * cfg.order) : closed_Ft(cfg.t, s, *res.Q2, cfg.order, opt);
            break;
        case NPointMethod::ClosedR:
            res.r = cfg.r.value_or(1);
            res.value = closed_Ft_r(cfg.t, s, *res.r, cfg.order, opt);
            break;
        case NPointMethod::Contour: {
            PrecisionGuard g(cfg.precision_bits);
            QuadratureConfig qc;
            qc.precision_bits = cfg.precision_bits;
            qc.m_max = cfg.m_max;
            qc.target_digits = cfg.target_digits;
            qc.threads = cfg.threads;
            std::vector<BigFloat> sf;
            for (const auto& v : s) {
                sf.push_back(to_bigfloat(v.s));
            }
            TorusResult tr = extract_theta_product(cfg.t, sf, to_bigfloat(parse_rational(*cfg.Q)), qc);
            res.value = std::vector<BigComplex>{tr.value};
            res.elapsed_ms = elapsed();
            json env = to_json(res);
            env["Q"] = *cfg.Q;
            return emit_torus(tr, env, cfg.format, out);
        }
    }
    res.elapsed_ms = elapsed();
    json env = to_json(res);
    const QSeries f = std::get<QSeries>(res.value);
    env.erase("series");
    emit_series(f, env, cfg.format, out);
    return 0;
}

int cmd_zfunction(const std::string& q_text, int order, const std::string& s_text, const std::string& format, std::ostream& out)
{
    const Rational q = rational_arg("q", q_text);
    if (q <= 1) {
        throw ConfigError("q must be a rational > 1");
    }
    if (order < 0 || order > 12) {
        throw ConfigError("--order must lie in 0..12");
    }
    BiSeries<Rational> z(0);
    std::string route;
    if (s_text.empty()) {
        z = qdeformed_Z_sum(q, order);
        route = qdeformed_Z_product(q, order) == z ? "sum = product" : "sum != product";
    } else {
        std::vector<SValue> s;
        try {
            s = parse_svalues(s_text);
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        z = qdeformed_Zn_sum(q, s, order);
        route = "sum";
    }
    json terms = json::array();
    for (const auto& [key, c] : z.terms()) {
        terms.push_back({{"Q_exp2", key.first}, {"Q1_exp2", key.second}, {"coeff", to_string(c)}});
    }
    json report = {{"q", to_string(q)}, {"order2", z.trunc2()}, {"check", route}, {"terms", terms}};
    if (format == "csv") {
        out << "Q_exp2,Q1_exp2,coeff\n";
        for (const auto& t : terms) {
            out << t["Q_exp2"] << ',' << t["Q1_exp2"] << ',' << t["coeff"].get<std::string>() << '\n';
        }
    } else if (format == "pretty") {
        out << "q = " << to_string(q) << ", " << route << '\n';
        for (const auto& t : terms) {
            out << "  Q^(" << t["Q_exp2"] << "/2) Q1^(" << t["Q1_exp2"] << "/2)  " << t["coeff"].get<std::string>() << '\n';
        }
    } else {
        out << report.dump(2) << '\n';
    }
    return route == "sum != product" ? kExitVerify : 0;
}

QSeries correlator(int t, const std::vector<int>& l, int order)
{
    if (l.empty() || l.size() > 3) {
        throw ConfigError("--l takes 1 to 3 positive integers");
    }
    std::vector<int> e;
    for (int x : l) {
        if (x < 1 || x > 8) {
            throw ConfigError("each l must lie in 1..8");
        }
        e.push_back(x - 1);
    }
    return correlation_expansion(t, static_cast<int>(l.size()), l, order).coefficient(e);
}

std::string correlator_name(const std::vector<int>& l)
{
    std::string out = "<";
    for (int x : l) {
        out += "f" + std::to_string(x);
    }
    return out + ">";
}

int cmd_correlation(int t, const std::string& l_text, int order, const std::string& format, std::ostream& out)
{
    if (t < 2) {
        throw ConfigError("t must be >= 2");
    }
    if (order < 0) {
        throw ConfigError("--order must be >= 0");
    }
    const auto l = split_ints(l_text);
    const QSeries f = correlator(t, l, order);
    json env = {{"t", t}, {"l", l}, {"target", correlator_name(l)}, {"order2", 2 * order}};
    emit_series(f, env, format, out);
    return 0;
}

int cmd_quasimod(int t, const std::string& l_text, const std::string& target, int weight, int fit, int check,
                 const std::string& expect, int threads, const std::string& format, std::ostream& out)
{
    if (t < 2) {
        throw ConfigError("t must be >= 2");
    }
    if (fit < 0 || check <= fit) {
        throw ConfigError("need 0 <= --fit < --check");
    }
    QSeries f;
    std::string name;
    int w = weight;
    if (target == "correlator") {
        const auto l = split_ints(l_text);
        f = correlator(t, l, check);
        name = correlator_name(l);
        if (w < 0) {
            w = 0;
            for (int x : l) {
                w += x;
            }
        }
    } else if (target == "e2") {
        f = eisenstein(1, check);
        name = "E_2";
    } else if (target == "control") {
        f = QSeries::zero(2 * check);
        for (int n = 1; 3 * n * n <= check; ++n) {
            f.add_term(6 * n * n, Rational(1));
        }
        name = "sum Q^{3n^2}";
    } else {
        throw ConfigError("--target must be correlator, e2 or control");
    }
    if (w < 0) {
        w = 2;
    }
    if (w > 8) {
        throw ConfigError("weight bound must be <= 8");
    }
    const WeightedBasis basis = build_basis(t, w, check, threads);
    const MembershipResult r = membership_solve(f, basis, fit, check);
    json report = membership_report(name, basis, r);
    if (format == "pretty") {
        out << name << " at t=" << t << ", weight <= " << w << ": " << status_name(r.status);
        if (r.failing_index) {
            out << " (first failing Q^" << *r.failing_index << ")";
        }
        out << '\n';
        for (std::size_t m = 0; m < basis.monomials.size(); ++m) {
            if (!r.coeffs[m].is_zero()) {
                out << "  " << basis.monomials[m].name(basis.generators) << "  " << report["coeffs"][m].dump() << '\n';
            }
        }
    } else if (format == "csv") {
        out << "monomial,coeff\n";
        for (std::size_t m = 0; m < basis.monomials.size(); ++m) {
            out << basis.monomials[m].name(basis.generators) << ',' << report["coeffs"][m].dump() << '\n';
        }
    } else {
        out << report.dump(2) << '\n';
    }
    if (!expect.empty() && expect != status_name(r.status)) {
        return kExitVerify;
    }
    return 0;
}

int cmd_contour(const std::string& formula, int t, const std::string& s_text, const std::string& Q_text,
                const std::string& Q2_text, unsigned bits, int m_max, int digits, int threads, const std::string& format,
                std::ostream& out)
{
    const auto s_items = split(s_text);
    if (s_items.empty() || s_items.size() > 3) {
        throw ConfigError("--s takes 1 to 3 values");
    }
    const Rational Q = rational_arg("Q", Q_text);
    if (Q <= 0 || Q >= 1) {
        throw ConfigError("Q must lie in (0, 1)");
    }
    for (const auto& x : s_items) {
        if (rational_arg("s", x) <= 1) {
            throw ConfigError("s-values must be > 1");
        }
    }
    if (bits < 64) {
        throw ConfigError("precision must be at least 64 bits");
    }
    PrecisionGuard g(bits);
    QuadratureConfig qc;
    qc.precision_bits = bits;
    qc.m_max = m_max;
    qc.target_digits = digits;
    qc.threads = threads;
    const auto s = bigfloat_list(s_items);
    const BigFloat Qf = to_bigfloat(Q);
    const BigFloat Q2 = to_bigfloat(rational_arg("Q2", Q2_text));
    TorusResult r;
    try {
        if (formula == "product") {
            r = extract_theta_product(t, s, Qf, qc);
        } else if (formula == "det") {
            r = extract_theta3_det(t, s, Qf, Q2, qc);
        } else if (formula == "bo") {
            r = extract_bo(s, Qf, Q2, qc);
        } else {
            throw ConfigError("--formula must be product, det or bo");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    json env = {{"formula", formula}, {"t", t}, {"s", s_items}, {"Q", Q_text}};
    if (formula != "product") {
        env["Q2"] = Q2_text;
    }
    return emit_torus(r, env, format, out);
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int threads, const std::string& format, std::ostream& out)
{
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = suite_names();
    } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
        suites = {suite};
    } else {
        throw ConfigError("unknown suite '" + suite + "'");
    }
    bool ok = true;
    json all = json::array();
    for (const auto& name : suites) {
        SuiteReport rep = run_suite(name, seed, threads);
        ok = ok && rep.pass();
        json checks = json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"ms", c.ms}});
        }
        all.push_back({{"suite", name}, {"pass", rep.pass()}, {"checks", checks}});
        if (format != "json") {
            out << "== " << name << " (seed " << seed << ")\n";
            for (const auto& c : rep.checks) {
                out << (c.pass ? "PASS " : "FAIL ") << std::setw(9) << std::fixed << std::setprecision(1) << c.ms << " ms  "
                    << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
            }
        }
    }
    if (format == "json") {
        out << json({{"seed", seed}, {"pass", ok}, {"suites", all}}).dump(2) << '\n';
    } else {
        out << (ok ? "all checks passed" : "verification FAILED") << '\n';
    }
    return ok ? 0 : kExitVerify;
}

int dispatch(std::vector<std::string> args, Streams io);

struct GoldenCase {
    std::string file;
    std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases()
{
    static const std::vector<GoldenCase> cases = {
        {"count_tcores_t2.json", {"count-tcores", "--t", "2", "--max", "10"}},
        {"count_tcores_t5.json", {"count-tcores", "--t", "5", "--max", "4"}},
        {"count_tcores_t3.json", {"count-tcores", "--t", "3", "--max", "20"}},
        {"npoint_brute_t2_s4.json", {"npoint", "--t", "2", "--n", "1", "--s", "4", "--method", "brute", "--order", "6"}},
        {"npoint_closed_t2_s4.json", {"npoint", "--t", "2", "--n", "1", "--s", "4", "--method", "closed", "--order", "6"}},
        {"npoint_n0.json", {"npoint", "--t", "3", "--n", "0", "--method", "brute", "--order", "4"}},
        {"npoint_closed_r_t3.json",
         {"npoint", "--t", "3", "--n", "2", "--s", "4,9/4", "--method", "closed-r", "--r", "1", "--order", "6"}},
        {"npoint_brute_t3.csv", {"npoint", "--t", "3", "--n", "2", "--s", "4,9/4", "--order", "6", "--format", "csv"}},
        {"zfunction_q2.json", {"zfunction", "--q", "2", "--order", "4"}},
        {"correlation_t2_f2.json", {"correlation", "--t", "2", "--l", "2", "--order", "8"}},
        {"quasimod_t2_f2.json", {"quasimod-check", "--t", "2", "--l", "2"}},
        {"quasimod_t3_f1f1.json", {"quasimod-check", "--t", "3", "--l", "1,1"}},
        {"quasimod_control.json", {"quasimod-check", "--t", "2", "--target", "control", "--weight", "2"}},
        {"contour_t2_s4.json",
         {"contour-extract", "--formula", "product", "--t", "2", "--s", "4", "--Q", "1/10", "--precision", "128", "--digits", "15"}},
    };
    return cases;
}

std::string normalize(const std::string& text, const std::string& file)
{
    if (file.size() < 5 || file.substr(file.size() - 5) != ".json") {
        return text;
    }
    json j = json::parse(text);
    strip_timing(j);
    return j.dump(2) + "\n";
}

int cmd_golden(const std::string& dir, bool bless, Streams io)
{
    namespace fs = std::filesystem;
    int failures = 0;
    for (const auto& gc : golden_cases()) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = dispatch(gc.args, {out, err});
        if (code != 0) {
            io.out << "FAIL " << gc.file << ": exit " << code << " " << err.str() << '\n';
            ++failures;
            continue;
        }
        const std::string got = normalize(out.str(), gc.file);
        const fs::path path = fs::path(dir) / gc.file;
        std::string expected;
        if (std::ifstream in(path); in) {
            std::stringstream ss;
            ss << in.rdbuf();
            expected = ss.str();
        }
        if (got == expected) {
            io.out << "ok   " << gc.file << '\n';
            continue;
        }
        if (bless) {
            io.out << (expected.empty() ? "new  " : "diff ") << gc.file << '\n';
            std::istringstream a(expected);
            std::istringstream b(got);
            std::string la;
            std::string lb;
            while (true) {
                const bool ha = static_cast<bool>(std::getline(a, la));
                const bool hb = static_cast<bool>(std::getline(b, lb));
                if (!ha && !hb) {
                    break;
                }
                if (ha && hb && la == lb) {
                    continue;
                }
                if (ha) {
                    io.out << "  - " << la << '\n';
                }
                if (hb) {
                    io.out << "  + " << lb << '\n';
                }
            }
            std::ofstream(path) << got;
        } else {
            io.out << "FAIL " << gc.file << (expected.empty() ? " (missing)" : " (differs)") << '\n';
            ++failures;
        }
    }
    if (bless) {
        io.out << "golden files written to " << dir << "; review the diff above before committing\n";
        return 0;
    }
    return failures == 0 ? 0 : kExitVerify;
}

int dispatch(std::vector<std::string> args, Streams io)
{
    CLI::App app{"t-core partition n-point functions", "tcore"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    int threads = 1;
    app.add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    int ct_t = 2;
    int ct_max = 10;
    auto* ct = app.add_subcommand("count-tcores", "t-core counts against both product formulas");
    ct->add_option("--t", ct_t)->required();
    ct->add_option("--max", ct_max, "largest size");

    RunConfig np;
    np.command = "npoint";
    std::string np_s;
    std::string np_q2;
    std::string np_Q;
    int np_r = 0;
    unsigned np_bits = 0;
    auto* npc = app.add_subcommand("npoint", "n-point function F_t");
    npc->add_option("--t", np.t)->required();
    npc->add_option("--n", np.n);
    npc->add_option("--s", np_s, "comma-separated squares of rationals, e.g. 4,9/4");
    npc->add_option("--order", np.order, "Q order");
    npc->add_option("--method", np.method, "brute, closed, closed-r or contour");
    npc->add_option("--Q2", np_q2, "auxiliary parameter of the closed route");
    npc->add_option("--r", np_r, "split index of the theta-only route");
    npc->add_option("--Q", np_Q, "numeric Q for the contour route");
    npc->add_option("--precision", np_bits, "bits for the contour route");
    npc->add_option("--M", np.m_max, "largest grid size for the contour route");
    npc->add_option("--digits", np.target_digits, "target digits for the contour route");
    npc->add_flag("--all-tuples", np.all_tuples, "keep tuples with repeated indices");

    std::string z_q = "2";
    int z_order = 4;
    std::string z_s;
    auto* zc = app.add_subcommand("zfunction", "q-deformed partition function");
    zc->add_option("--q", z_q);
    zc->add_option("--order", z_order, "total degree");
    zc->add_option("--s", z_s, "insert the n-point observables at these s-values");

    int co_t = 2;
    std::string co_l = "2";
    int co_order = 8;
    auto* cc = app.add_subcommand("correlation", "correlator <f_l1 ... f_ln>");
    cc->add_option("--t", co_t)->required();
    cc->add_option("--l", co_l, "comma-separated orders");
    cc->add_option("--order", co_order);

    int qm_t = 2;
    std::string qm_l = "2";
    std::string qm_target = "correlator";
    int qm_w = -1;
    int qm_fit = 20;
    int qm_check = 30;
    std::string qm_expect;
    auto* qc = app.add_subcommand("quasimod-check", "membership in the weight-graded Eisenstein algebra");
    qc->add_option("--t", qm_t)->required();
    qc->add_option("--l", qm_l, "correlator orders");
    qc->add_option("--target", qm_target, "correlator, e2 or control");
    qc->add_option("--weight", qm_w, "weight bound (default sum of l)");
    qc->add_option("--fit", qm_fit);
    qc->add_option("--check", qm_check);
    qc->add_option("--expect", qm_expect, "exit 3 unless the status matches")->check(CLI::IsMember({"accept", "reject", "underdetermined"}));

    std::string ce_formula = "product";
    int ce_t = 2;
    std::string ce_s;
    std::string ce_Q;
    std::string ce_Q2 = "1";
    unsigned ce_bits = 0;
    int ce_M = 1024;
    int ce_digits = 20;
    auto* cec = app.add_subcommand("contour-extract", "numeric torus extraction");
    cec->add_option("--formula", ce_formula, "product, det or bo");
    cec->add_option("--t", ce_t);
    cec->add_option("--s", ce_s)->required();
    cec->add_option("--Q", ce_Q)->required();
    cec->add_option("--Q2", ce_Q2);
    cec->add_option("--precision", ce_bits);
    cec->add_option("--M", ce_M, "largest grid size");
    cec->add_option("--digits", ce_digits);

    std::string v_suite;
    std::uint64_t v_seed = 0;
    auto* vc = app.add_subcommand("verify", "run a verification suite");
    vc->add_option("suite", v_suite, "partitions, symfunc, theta, npoint-routes, contour, quasimod or all")->required();
    vc->add_option("--seed", v_seed);

    std::string g_dir = "tests/golden";
    bool g_bless = false;
    auto* gc = app.add_subcommand("golden", "compare CLI outputs with golden files");
    gc->add_option("--dir", g_dir);
    gc->add_flag("--bless", g_bless, "rewrite the golden files and print the diff");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*ct) {
            return cmd_count_tcores(ct_t, ct_max, format, io.out);
        }
        if (*npc) {
            np.s = split(np_s);
            np.format = format;
            np.threads = threads;
            if (!np_q2.empty()) {
                np.Q2 = np_q2;
            }
            if (npc->count("--r") > 0) {
                np.r = np_r;
            }
            if (!np_Q.empty()) {
                np.Q = np_Q;
            }
            np.precision_bits = np_bits > 0 ? np_bits : default_precision();
            return cmd_npoint(np, io.out);
        }
        if (*zc) {
            return cmd_zfunction(z_q, z_order, z_s, format, io.out);
        }
        if (*cc) {
            return cmd_correlation(co_t, co_l, co_order, format, io.out);
        }
        if (*qc) {
            return cmd_quasimod(qm_t, qm_l, qm_target, qm_w, qm_fit, qm_check, qm_expect, threads, format, io.out);
        }
        if (*cec) {
            const unsigned bits = ce_bits > 0 ? ce_bits : default_precision();
            return cmd_contour(ce_formula, ce_t, ce_s, ce_Q, ce_Q2, bits, ce_M, ce_digits, threads, format, io.out);
        }
        if (*vc) {
            return cmd_verify(v_suite, v_seed, threads, format == "json" && app.count("--format") == 0 ? "pretty" : format,
                              io.out);
        }
        if (*gc) {
            return cmd_golden(g_dir, g_bless, io);
        }
    } catch (const ConfigError& e) {
        io.err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        io.err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(std::move(args), {std::cout, std::cerr});
}
