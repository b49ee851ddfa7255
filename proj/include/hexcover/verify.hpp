#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "hexcover/covering.hpp"
#include "hexcover/gamma.hpp"

namespace hexcover {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
};

struct RunReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;
    int passed() const;
    int failed() const;
};

// stable machine-readable layout: one suite line, then one line per check
void print_report(const RunReport& report, std::ostream& os);

Word random_word(std::mt19937& rng, int max_len);

// sample window where the modular functions are well conditioned in absolute terms
cplx random_band_point(std::mt19937& rng);

RunReport verify_group();
RunReport verify_elliptic();
RunReport verify_cover(const CoverContext& ctx);
RunReport verify_sl3();
std::vector<RunReport> verify_all();

} // namespace hexcover
