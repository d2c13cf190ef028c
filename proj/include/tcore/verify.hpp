#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcore/series.hpp"

namespace tcore {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};

/// partitions, symfunc, theta, npoint-routes, contour, quasimod.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite; "all" is not accepted here.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int threads = 1);

/// The ten acceptance criteria, numbered 1..10.
CheckResult acceptance_criterion(int k, int threads = 1);

/// prod_{b>=1} (1 - Q^{bt})^b / (1 - Q^b), the alternative exponent reading.
QSeries tcore_candidate_varying(int t, int max_size);

}  // namespace tcore
