#pragma once

#include "wheel/wheel.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wheel::cli {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);

/// (quantity label, exact value) rows of the per-wheel summary table.
std::vector<std::pair<std::string, Rational>> table_rows(const WheelSpec& spec);

std::string emit_table(const WheelSpec& spec, Format format);

struct VerifyOptions {
    std::int64_t n_min = 3;
    std::int64_t n_max = 20;
    std::uint64_t seed = 0;
    std::uint64_t walks = 20'000;
    bool skip_montecarlo = false;
};

struct CheckTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;
    // Monte Carlo misses are expected at a low rate; the class fails only
    // when they exceed kMaxMonteCarloMissRate of its configurations.
    bool statistical = false;

    void record(bool ok, const std::string& what);
    bool ok() const;
};

/// Largest tolerated fraction of Monte Carlo configurations outside 3 sigma.
inline constexpr double kMaxMonteCarloMissRate = 0.15;

struct VerifyReport {
    VerifyOptions options;
    std::vector<CheckTally> classes;
    bool ok() const;
};

VerifyReport run_verification(const VerifyOptions& options);

std::string render_report(const VerifyReport& report, Format format);

/// Entry point. Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wheel::cli
