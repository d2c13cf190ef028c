#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tcore/bigcomplex.hpp"
#include "tcore/biseries.hpp"
#include "tcore/laurent.hpp"
#include "tcore/partition.hpp"
#include "tcore/theta.hpp"

namespace tcore {

/// s > 1 with a rational square root.
struct SValue {
    Rational s;
    Rational sqrt_s;

    /// Throws unless s is the square of a rational and s > 1.
    static SValue from_square(const Rational& s);
    std::string to_string() const { return s.get_str(); }
};

/// Checks every sub-product s_pi against 1 and against xi_t^m.
void validate_svalues(const std::vector<SValue>& s, int t);

/// Parses a comma-separated list such as "4,9/4".
std::vector<SValue> parse_svalues(const std::string& text);

/// Blocks of a set partition of {1..n}, each sorted, ordered by least element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const SetPartition&) const = default;
};

/// All set partitions of {1..n} in canonical order (1 <= n <= 8).
std::vector<SetPartition> set_partitions(int n);

/// T(nu) = sum_i s^{nu_i - i + 1/2}, the tail summed in closed form.
Rational level_sum(const Partition& nu, const SValue& s);

/// F_t(Q; s) from its defining sum over t-cores of size <= order.
QSeries brute_force_Ft(int t, const std::vector<SValue>& s, int order, int threads = 1);

/// The same sum over every partition (the Bloch-Okounkov n-point function).
QSeries bloch_okounkov_F(const std::vector<SValue>& s, int order, int threads = 1);
/// n = 1 case of the above from histograms of nu_i - i and l(nu), so large
/// orders do not need every partition in memory.
QSeries bloch_okounkov_one_point(const SValue& s, int order);

struct ClosedOptions {
    bool all_tuples = false;  // include l-tuples with repeated entries
    int threads = 1;
};

/// Closed formula with free parameter Q2, over Q(xi_{2t}).
CSeries closed_Ft_cyclo(int t, const std::vector<SValue>& s, const Rational& Q2, int order, const ClosedOptions& opt = {});
/// Theta-only specialization for 1 <= r < n, over Q(xi_{2t}).
CSeries closed_Ft_r_cyclo(int t, const std::vector<SValue>& s, int r, int order, const ClosedOptions& opt = {});

/// The rational series behind a cyclotomic one; throws std::logic_error if a
/// coefficient is not rational or an exponent is not an integer.
QSeries rational_part_checked(const CSeries& f);

QSeries closed_Ft(int t, const std::vector<SValue>& s, const Rational& Q2, int order, const ClosedOptions& opt = {});
QSeries closed_Ft_r(int t, const std::vector<SValue>& s, int r, int order, const ClosedOptions& opt = {});

/// t/(s^{t/2}-s^{-t/2}) prod_{a<t} theta(s xi^a)/theta(xi^a).
QSeries one_point_closed(int t, const SValue& s, int order);

/// Z(Q;Q1,q) in x = Q, y = Q1, truncated at total degree order_total.
BiSeries<Rational> qdeformed_Z_sum(const Rational& q, int order_total);
BiSeries<Rational> qdeformed_Z_product(const Rational& q, int order_total);
/// Z(Q;Q1,q;s_1..s_n) from its defining sum.
BiSeries<Rational> qdeformed_Zn_sum(const Rational& q, const std::vector<SValue>& s, int order_total);

/// F_t(Q; e^{z_1}, ..., e^{z_n}) expanded in z_j up to z_j^{l_orders[j]-1}.
/// The coefficient of prod z_j^{l_j-1} is <f_{l_1} ... f_{l_n}>_Q.
LaurentTaylor correlation_expansion(int t, int n, const std::vector<int>& l_orders, int q_order);

enum class NPointMethod { Brute, Closed, ClosedR, Contour };
std::string method_name(NPointMethod m);

struct NPointResult {
    NPointMethod method = NPointMethod::Brute;
    int t = 0;
    std::vector<SValue> s;
    std::optional<Rational> Q2;
    std::optional<int> r;
    int order = 0;
    std::variant<QSeries, std::vector<BigComplex>> value;
    double elapsed_ms = 0;
};

}  // namespace tcore
