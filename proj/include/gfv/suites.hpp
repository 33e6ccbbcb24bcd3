#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfv {

/// One verification line: a computed value against its target.
struct CheckRow {
    std::string name;
    double value = 0.0;
    /// Monte Carlo standard error; 0 for deterministic rows.
    double std_error = 0.0;
    double target = 0.0;
    /// Admissible |value - target|.
    double tolerance = 0.0;
    bool pass = false;
};

/// Pass when |value - target| <= tolerance.
CheckRow make_row(std::string name, double value, double target, double tolerance, double std_error = 0.0);

struct SuiteOptions {
    std::uint64_t seed = 20240611;
    /// Monte Carlo draws per case.
    std::int64_t samples = 1'000'000;
    /// Optional overrides for the irreversibility suite.
    std::optional<double> alpha;
    std::optional<double> theta;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
};

/// The fourteen acceptance criteria in order.
const std::vector<Criterion>& criteria();

/// Rows of one criterion, 1 <= id <= 14.
std::vector<CheckRow> criterion_rows(int id, const SuiteOptions& opt);

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Rows of a named suite; "all" runs every suite. Throws InvalidParameter
/// for an unknown name.
std::vector<CheckRow> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace gfv
