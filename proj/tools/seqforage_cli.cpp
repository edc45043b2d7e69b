// seqforage: batch front end for the solver and simulator.
//
//   seqforage solve    --config cfg [--out dir] [--workers n]
//   seqforage sweep    --config cfg [--out dir] [--workers n] [--seed s] [--tables dir [--require-tables]]
//   seqforage align    --config cfg [--out dir] [--workers n] [--seed s] [--driver rewardmax|infomax|random]
//   seqforage boundary [--config cfg] [--h 0.75] [--q-grid "linspace(0.5, 1, 21)"] [--out dir]
//
// Exit status: 0 ok, 2 invalid configuration or arguments, 1 anything else.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "seqforage/config.hpp"
#include "seqforage/errors.hpp"
#include "seqforage/experiment.hpp"

using namespace seqforage;

namespace {

struct Common {
    std::string config;
    std::string out;
    unsigned workers = 0;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c, bool config_required) {
    auto* opt = cmd->add_option("--config", c.config, "configuration file (key = value)");
    if (config_required) opt->required();
    cmd->add_option("--out", c.out, "output directory (overrides sweep.output_dir)");
    cmd->add_option("--workers", c.workers, "worker threads, 0 = all cores")->capture_default_str();
    cmd->add_option("--seed", c.seed, "master seed (overrides sweep.master_seed)");
}

SweepConfig load(const Common& c) {
    SweepConfig cfg = c.config.empty() ? SweepConfig{} : load_config(c.config);
    if (!c.out.empty()) cfg.output_dir = c.out;
    if (c.seed) cfg.master_seed = *c.seed;
    return cfg;
}

void report(const std::vector<std::filesystem::path>& paths) {
    for (const auto& p : paths) std::cout << p.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and simulator for rewardmax / infomax foraging agents"};
    app.require_subcommand(1);

    Common solve_opts, sweep_opts, align_opts, boundary_opts;

    auto* solve = app.add_subcommand("solve", "solve policy tables for every grid cell");
    add_common(solve, solve_opts, true);

    auto* sweep = app.add_subcommand("sweep", "run ensembles and write sweep.csv / differentials.csv");
    add_common(sweep, sweep_opts, true);
    std::string tables_dir;
    bool require_tables = false;
    sweep->add_option("--tables", tables_dir, "load tables from this directory (as written by solve)");
    sweep->add_flag("--require-tables", require_tables, "fail on a missing table instead of solving it");

    auto* align = app.add_subcommand("align", "rewardmax / infomax action alignment, writes alignment.csv");
    add_common(align, align_opts, true);
    std::string driver;
    align->add_option("--driver", driver, "policy that drives the shared trajectory (overrides sweep.driver)");

    auto* boundary = app.add_subcommand("boundary", "closed-form phase boundary, writes boundary.csv");
    add_common(boundary, boundary_opts, false);
    boundary->set_help_flag("--help", "print this help and exit");  // frees -h
    std::optional<double> h;
    std::string q_grid;
    boundary->add_option("--h", h, "evidence parameter (overrides base.h)");
    boundary->add_option("--q-grid", q_grid, "q values, list or linspace(a, b, n) (overrides sweep.q_grid)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*solve) {
            report(cmd_solve(load(solve_opts), solve_opts.workers));
        } else if (*sweep) {
            std::optional<std::filesystem::path> dir;
            if (!tables_dir.empty()) dir = tables_dir;
            report(cmd_sweep(load(sweep_opts), sweep_opts.workers, dir, require_tables));
        } else if (*align) {
            SweepConfig cfg = load(align_opts);
            if (!driver.empty()) cfg.driver = parse_driver(driver);
            report(cmd_align(cfg, align_opts.workers));
        } else if (*boundary) {
            SweepConfig cfg = load(boundary_opts);
            const double hv = h.value_or(cfg.base.h);
            if (!(hv > 0.5 && hv < 1.0)) throw ConfigError("--h", "must lie in (0.5, 1)");
            std::vector<double> qs = q_grid.empty() ? cfg.q_grid : parse_grid(q_grid, "--q-grid");
            if (q_grid.empty() && boundary_opts.config.empty()) qs = parse_grid("linspace(0.5, 1, 21)", "--q-grid");
            for (std::size_t i = 0; i < qs.size(); ++i) {
                if (!(qs[i] >= 0.5 && qs[i] <= 1.0)) {
                    throw ConfigError("--q-grid[" + std::to_string(i) + "]", "must lie in [0.5, 1]");
                }
            }
            report(cmd_boundary(hv, qs, cfg.output_dir));
        }
    } catch (const ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
