#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seqforage/env_params.hpp"
#include "seqforage/policy.hpp"
#include "seqforage/simulation.hpp"

namespace seqforage {

/// Everything a batch command needs. Loaded from flat `key = value` text:
///
///   # comment
///   base.h = 0.75
///   sweep.epsilon_grid = linspace(0, 0.5, 21)
///   sweep.q_grid = 0.8, 0.9, 1.0
///   sweep.objectives = rewardmax, infomax
///
/// Keys live under base.*, sweep.* and dp.*; unknown keys are rejected.
struct SweepConfig {
    EnvParams base{};
    std::vector<double> epsilon_grid{0.1};
    std::vector<double> q_grid{0.8};
    std::vector<double> gamma_list{1.0};
    std::vector<Objective> objectives{Objective::Rewardmax, Objective::Infomax};
    std::size_t n_realizations = 10000;
    std::uint64_t master_seed = 1;
    DPConfig dp{};
    AlignmentDriver driver = AlignmentDriver::Rewardmax;
    std::filesystem::path output_dir = "out";
    std::size_t log_realizations = 0;  ///< per-cell realization logs to write (0 = none)

    /// Throws ConfigError with a dotted field name ("base.q", "sweep.q_grid[3]").
    void validate() const;

    /// base with (epsilon, q, gamma) replaced.
    EnvParams cell(double epsilon, double q, double gamma) const;
};

SweepConfig parse_config(std::istream& is);
SweepConfig load_config(const std::filesystem::path& path);

/// "a, b, c" or "linspace(start, stop, count)" (inclusive, evenly spaced).
std::vector<double> parse_grid(std::string_view text, std::string_view field);

}  // namespace seqforage
