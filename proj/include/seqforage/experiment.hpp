#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqforage/analytics.hpp"
#include "seqforage/config.hpp"
#include "seqforage/metrics.hpp"
#include "seqforage/simulation.hpp"

namespace seqforage {

struct SweepRow {
    Objective objective;
    double epsilon;
    double q;
    double gamma;
    EnsembleSummary summary;
};

struct DifferentialRow {
    double epsilon;
    double q;
    double gamma;
    Differentials diff;
};

struct AlignmentRow {
    double epsilon;
    double q;
    double gamma;
    AlignmentDriver driver;
    AlignmentSummary summary;
};

/// One ensemble per (gamma, epsilon, q, objective), in that nesting order.
/// Every cell uses the same master seed, so the objectives in a cell see
/// common random numbers. With `tables_dir`, tables are loaded from
/// table_filename() there; a missing file is solved on demand, or is an
/// error when `require_tables` is set.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned workers,
                                const std::optional<std::filesystem::path>& tables_dir = std::nullopt,
                                bool require_tables = false);

/// Pairs rewardmax and infomax rows of the same cell.
std::vector<DifferentialRow> compute_differentials(std::span<const SweepRow> rows);

/// Alignment of the solved rewardmax and infomax tables per (gamma, epsilon, q).
std::vector<AlignmentRow> run_alignment(const SweepConfig& cfg, unsigned workers);

// CSV writers; column names are the interchange contract with the plotting side.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_differentials_csv(std::ostream& os, std::span<const DifferentialRow> rows);
void write_alignment_csv(std::ostream& os, std::span<const AlignmentRow> rows);
void write_boundary_csv(std::ostream& os, const BoundaryCurve& curve);
void write_realization_log_csv(std::ostream& os, std::span<const RealizationRecord> records);

std::string table_filename(Objective objective, const EnvParams& env);

// Subcommands. Each returns the files it wrote.
std::vector<std::filesystem::path> cmd_solve(const SweepConfig& cfg, unsigned workers);
std::vector<std::filesystem::path> cmd_sweep(const SweepConfig& cfg, unsigned workers,
                                             const std::optional<std::filesystem::path>& tables_dir = std::nullopt,
                                             bool require_tables = false);
std::vector<std::filesystem::path> cmd_align(const SweepConfig& cfg, unsigned workers);
std::vector<std::filesystem::path> cmd_boundary(double h, std::span<const double> q_grid,
                                                const std::filesystem::path& output_dir);

}  // namespace seqforage
