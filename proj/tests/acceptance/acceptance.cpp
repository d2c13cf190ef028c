#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "tcore/verify.hpp"

int main(int argc, char** argv)
{
    int threads = 1;
    if (argc > 1) {
        threads = std::max(1, std::atoi(argv[1]));
    }
    int failed = 0;
    for (int k = 1; k <= 10; ++k) {
        const tcore::CheckResult r = tcore::acceptance_criterion(k, threads);
        failed += r.pass ? 0 : 1;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << k << "  " << r.name << "  ("
                  << std::fixed << std::setprecision(2) << r.ms / 1000.0 << " s)  " << r.detail << std::endl;
    }
    std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
