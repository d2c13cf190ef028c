#include "tcore/json_io.hpp"

#include <sstream>

namespace tcore {

namespace {

template <class K>
json series_json(const Series<K>& f)
{
    json terms = json::array();
    f.for_each_term([&](int e, const K& c) { terms.push_back({{"exp2", e}, {"coeff", to_json(c)}}); });
    json out;
    out["order2"] = f.is_exact() ? json(nullptr) : json(f.trunc2());
    out["terms"] = std::move(terms);
    return out;
}

std::string bigfloat_string(const BigFloat& x, int digits) { return x.str(digits, std::ios_base::scientific); }

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

json to_json(const CycloNum& c)
{
    if (auto q = c.as_rational()) {
        return to_string(*q);
    }
    json coeffs = json::array();
    for (const auto& x : c.coeffs()) {
        coeffs.push_back(to_string(x));
    }
    return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

json to_json(const QSeries& f) { return series_json(f); }
json to_json(const CSeries& f) { return series_json(f); }

json to_json(const BigFloat& x, int digits) { return bigfloat_string(x, digits); }

json to_json(const BigComplex& z, int digits)
{
    return {{"re", bigfloat_string(z.real(), digits)}, {"im", bigfloat_string(z.imag(), digits)}};
}

QSeries qseries_from_json(const json& j)
{
    const int trunc2 = j.at("order2").is_null() ? QSeries::kExact : j.at("order2").get<int>();
    QSeries f = QSeries::zero(trunc2);
    for (const auto& term : j.at("terms")) {
        f.add_term(term.at("exp2").get<int>(), parse_rational(term.at("coeff").get<std::string>()));
    }
    return f;
}

json to_json(const NPointResult& r)
{
    json out;
    out["method"] = method_name(r.method);
    out["t"] = r.t;
    out["n"] = r.s.size();
    json s = json::array();
    for (const auto& v : r.s) {
        s.push_back(v.to_string());
    }
    out["s"] = s;
    if (r.Q2) {
        out["Q2"] = to_string(*r.Q2);
    }
    if (r.r) {
        out["r"] = *r.r;
    }
    out["order2"] = 2 * r.order;
    if (const auto* f = std::get_if<QSeries>(&r.value)) {
        out["series"] = to_json(*f);
    } else {
        json vals = json::array();
        for (const auto& z : std::get<std::vector<BigComplex>>(r.value)) {
            vals.push_back(to_json(z));
        }
        out["value"] = vals;
    }
    out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

json to_json(const TorusResult& r)
{
    json radii = json::array();
    for (const auto& c : r.radii) {
        radii.push_back(to_json(c, 20));
    }
    return {{"value_re", to_json(r.value.real())},
            {"value_im", to_json(r.value.imag())},
            {"M", r.M},
            {"precision_bits", r.precision_bits},
            {"converged", r.converged},
            {"est_error", to_json(r.est_error, 6)},
            {"radii", radii}};
}

json membership_report(const std::string& target, const WeightedBasis& basis, const MembershipResult& r)
{
    json monomials = json::array();
    json coeffs = json::array();
    for (std::size_t m = 0; m < basis.monomials.size(); ++m) {
        monomials.push_back(basis.monomials[m].name(basis.generators));
        coeffs.push_back(to_json(r.coeffs.empty() ? CycloNum(0) : r.coeffs[m]));
    }
    json dropped = json::array();
    for (auto m : r.dropped) {
        dropped.push_back(basis.monomials[m].name(basis.generators));
    }
    json out;
    out["target"] = target;
    out["weight"] = basis.W;
    out["t"] = basis.t;
    out["monomials"] = monomials;
    out["coeffs"] = coeffs;
    out["dropped"] = dropped;
    out["rank"] = r.rank;
    out["fit_N"] = r.fit_N;
    out["check_N"] = r.check_N;
    out["status"] = status_name(r.status);
    out["failing_index"] = r.failing_index ? json(*r.failing_index) : json(nullptr);
    return out;
}

std::string to_csv(const QSeries& f)
{
    std::ostringstream os;
    os << "exp2,coeff\n";
    f.for_each_term([&](int e, const Rational& c) { os << e << ',' << to_string(c) << '\n'; });
    return os.str();
}

json to_json(const RunConfig& c)
{
    json out;
    out["command"] = c.command;
    out["t"] = c.t;
    out["n"] = c.n;
    out["s"] = c.s;
    out["order"] = c.order;
    out["Q2"] = c.Q2 ? json(*c.Q2) : json(nullptr);
    out["r"] = c.r ? json(*c.r) : json(nullptr);
    out["method"] = c.method;
    out["Q"] = c.Q ? json(*c.Q) : json(nullptr);
    out["precision_bits"] = c.precision_bits;
    out["m_max"] = c.m_max;
    out["target_digits"] = c.target_digits;
    out["format"] = c.format;
    out["seed"] = c.seed;
    out["threads"] = c.threads;
    out["all_tuples"] = c.all_tuples;
    return out;
}

RunConfig run_config_from_json(const json& j)
{
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.t = j.at("t").get<int>();
    c.n = j.at("n").get<int>();
    c.s = j.at("s").get<std::vector<std::string>>();
    c.order = j.at("order").get<int>();
    if (!j.at("Q2").is_null()) {
        c.Q2 = j.at("Q2").get<std::string>();
    }
    if (!j.at("r").is_null()) {
        c.r = j.at("r").get<int>();
    }
    c.method = j.at("method").get<std::string>();
    if (!j.at("Q").is_null()) {
        c.Q = j.at("Q").get<std::string>();
    }
    c.precision_bits = j.at("precision_bits").get<unsigned>();
    c.m_max = j.at("m_max").get<int>();
    c.target_digits = j.at("target_digits").get<int>();
    c.format = j.at("format").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.threads = j.at("threads").get<int>();
    c.all_tuples = j.at("all_tuples").get<bool>();
    return c;
}

NPointMethod parse_method(const std::string& name)
{
    for (auto m : {NPointMethod::Brute, NPointMethod::Closed, NPointMethod::ClosedR, NPointMethod::Contour}) {
        if (method_name(m) == name) {
            return m;
        }
    }
    throw ConfigError("unknown method '" + name + "' (brute, closed, closed-r, contour)");
}

void validate(const RunConfig& c)
{
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (c.format != "json" && c.format != "csv" && c.format != "pretty") {
        fail("format must be json, csv or pretty");
    }
    if (c.threads < 1) {
        fail("threads must be >= 1");
    }
    if (c.t < 2) {
        fail("t must be >= 2");
    }
    if (c.order < 0) {
        fail("order must be >= 0");
    }
    if (c.command != "npoint") {
        return;
    }
    const NPointMethod method = parse_method(c.method);
    if (c.n < 0 || c.n > 8) {
        fail("n must lie in 0..8");
    }
    if (static_cast<int>(c.s.size()) != c.n) {
        fail("expected " + std::to_string(c.n) + " s-values, got " + std::to_string(c.s.size()));
    }
    std::vector<SValue> sv;
    try {
        for (const auto& x : c.s) {
            sv.push_back(SValue::from_square(parse_rational(x)));
        }
    } catch (const std::exception& e) {
        fail(std::string("bad s-value: ") + e.what());
    }
    if (method == NPointMethod::Closed || method == NPointMethod::ClosedR) {
        try {
            validate_svalues(sv, c.t);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    if (method == NPointMethod::Closed && c.Q2) {
        try {
            if (parse_rational(*c.Q2) == 0) {
                fail("Q2 must be nonzero");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            fail(std::string("bad Q2: ") + e.what());
        }
    }
    if (method == NPointMethod::ClosedR) {
        const int r = c.r.value_or(1);
        if (r < 1 || r >= c.n) {
            fail("the theta-only route needs n >= 2 and 1 <= r <= n-1");
        }
    }
    if (method == NPointMethod::Contour) {
        if (c.n < 1 || c.n > 3) {
            fail("contour extraction supports 1 <= n <= 3");
        }
        if (!c.Q) {
            fail("contour extraction needs a numeric --Q");
        }
        Rational q;
        try {
            q = parse_rational(*c.Q);
        } catch (const std::exception& e) {
            fail(std::string("bad Q: ") + e.what());
        }
        if (q <= 0 || q >= 1) {
            fail("Q must lie in (0, 1)");
        }
        if (c.precision_bits < 64) {
            fail("precision must be at least 64 bits");
        }
        if (c.m_max < 2) {
            fail("M must be >= 2");
        }
    }
}

}  // namespace tcore
