#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grundy/grundy_dp.hpp"

// Desk-scale acceptance criteria, shared by the acceptance test binary and
// the `selftest` subcommand.
namespace grundy::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

struct Config {
    std::uint64_t seed = kDefaultSeed;
    std::set<int> only;           // empty = every criterion
    dp::Options dp_options;       // mutation harness hook
    std::ostream* progress = nullptr;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run(const Config& config = {});

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);

nlohmann::json to_json(const std::vector<CriterionResult>& results, const Config& config);

}  // namespace grundy::acceptance
