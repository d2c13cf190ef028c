#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcore/contour.hpp"
#include "tcore/npoint.hpp"
#include "tcore/quasimod.hpp"

namespace tcore {

using json = nlohmann::ordered_json;

/// Invalid user configuration; the CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json to_json(const Rational& r);
/// Rationals as "p/q"; other field elements as {"conductor": m, "coeffs": [...]}.
json to_json(const CycloNum& c);
/// {"order2": trunc2 or null, "terms": [{"exp2": e, "coeff": "p/q"}, ...]}
json to_json(const QSeries& f);
json to_json(const CSeries& f);
json to_json(const BigComplex& z, int digits = 40);
json to_json(const BigFloat& x, int digits = 40);

QSeries qseries_from_json(const json& j);

/// {"method", "t", "n", "s", "order2", "series" | "value", "elapsed_ms"}.
json to_json(const NPointResult& r);
/// {"value_re", "value_im", "M", "precision_bits", "converged", "est_error"}.
json to_json(const TorusResult& r);
/// {"target", "weight", "monomials", "coeffs", "fit_N", "check_N", "status", ...}.
json membership_report(const std::string& target, const WeightedBasis& basis, const MembershipResult& r);

/// One row per Q-exponent: "exp2,coeff".
std::string to_csv(const QSeries& f);

struct RunConfig {
    std::string command;
    int t = 2;
    int n = 1;
    std::vector<std::string> s;  // exact "p/q" strings
    int order = 6;
    std::optional<std::string> Q2;
    std::optional<int> r;
    std::string method = "brute";
    std::optional<std::string> Q;  // numeric |Q| for contour, exact "p/q"
    unsigned precision_bits = 256;
    int m_max = 1024;
    int target_digits = 20;
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 1;
    bool all_tuples = false;
};

json to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);

/// Throws ConfigError for inconsistent or out-of-range settings.
void validate(const RunConfig& c);

NPointMethod parse_method(const std::string& name);

}  // namespace tcore
