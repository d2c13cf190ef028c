#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcore/theta.hpp"

namespace tcore {

struct Generator {
    enum class Kind { Level, Classical };
    Kind kind = Kind::Level;
    int a = 0;       // r for E^r_l, d for E_{2k}(Q^d)
    int b = 0;       // l for E^r_l, 2k for E_{2k}(Q^d)
    int weight = 0;  // l or 2k
    std::string name() const;
};

struct Monomial {
    std::vector<int> exponents;  // one per generator
    int weight = 0;
    std::string name(const std::vector<Generator>& gens) const;
};

/// Products of generators of total weight <= W, with expansions to Q^N.
struct WeightedBasis {
    int t = 0;
    int W = 0;
    int N = 0;
    std::vector<Generator> generators;
    std::vector<Monomial> monomials;
    std::vector<CSeries> expansions;
};

/// Generators E_{2k}(Q^d) (d | t, 2k <= W), then E^r_l (1 <= r < t, 1 <= l <= W).
WeightedBasis build_basis(int t, int W, int N, int threads = 1);

enum class MembershipStatus { Accept, Reject, Underdetermined };
std::string status_name(MembershipStatus s);

struct MembershipResult {
    MembershipStatus status = MembershipStatus::Reject;
    std::vector<CycloNum> coeffs;      // one per monomial; zero for dropped ones
    std::vector<std::size_t> dropped;  // monomials dependent on earlier ones over 0..check_N
    std::optional<int> failing_index;  // first Q-exponent that breaks the fit
    int rank = 0;
    int fit_N = 0;
    int check_N = 0;
};

/// Exact fit of target on Q^0..Q^fit_N, then an exact residual check on
/// Q^{fit_N+1}..Q^check_N.
MembershipResult membership_solve(const CSeries& target, const WeightedBasis& basis, int fit_N, int check_N);
MembershipResult membership_solve(const QSeries& target, const WeightedBasis& basis, int fit_N, int check_N);

/// log(theta(-e^z)/theta(-1)) = 2 sum_k z^{2k}/(2k)! (E_{2k}(Q) - 4^k E_{2k}(Q^2))
/// through z^{z_order} and Q^{q_order}, odd powers of z vanishing.
bool check_2core_identity(int z_order, int q_order);

}  // namespace tcore
