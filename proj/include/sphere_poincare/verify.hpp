#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sphere_poincare {

/// One numeric check: passes when residual <= tolerance.
struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Check> checks;
    double wall_time_s = 0.0;

    void add(std::string name, double residual, double tolerance);
    bool passed() const;
    double max_residual() const;
};

void write_text(std::ostream& os, const RunReport& report);
void write_json(std::ostream& os, const RunReport& report);

const std::vector<std::string>& suite_names();

/// Runs a named invariant battery with deterministic seeding.
/// Throws std::invalid_argument for an unknown suite.
RunReport run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace sphere_poincare
