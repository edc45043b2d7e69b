#include "seqforage/experiment.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include "seqforage/csv.hpp"
#include "seqforage/errors.hpp"
#include "seqforage/parallel.hpp"
#include "seqforage/table_io.hpp"

namespace seqforage {

namespace {

struct Cell {
    double epsilon;
    double q;
    double gamma;
};

std::vector<Cell> cells_of(const SweepConfig& cfg) {
    std::vector<Cell> cells;
    cells.reserve(cfg.gamma_list.size() * cfg.epsilon_grid.size() * cfg.q_grid.size());
    for (double g : cfg.gamma_list)
        for (double e : cfg.epsilon_grid)
            for (double q : cfg.q_grid) cells.push_back({e, q, g});
    return cells;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

ValueTable obtain_table(Objective objective, const EnvParams& env, const DPConfig& dp,
                        const std::optional<std::filesystem::path>& tables_dir, bool require_tables) {
    if (!tables_dir) return solve_policy(objective, env, dp);
    const auto path = *tables_dir / table_filename(objective, env);
    std::ifstream in(path);
    if (!in) {
        if (require_tables) throw StateError("missing table " + path.string());
        return solve_policy(objective, env, dp);
    }
    ValueTable table = read_table_csv(in);
    if (!(table.env() == env) || table.objective() != objective) {
        throw StateError("table " + path.string() + " does not match the requested cell");
    }
    return table;
}

std::string cell_tag(Objective objective, const EnvParams& env) {
    return std::string(to_string(objective)) + "_eps" + csv::format(env.epsilon) + "_q" + csv::format(env.q) +
           "_gamma" + csv::format(env.gamma);
}

}  // namespace

std::string table_filename(Objective objective, const EnvParams& env) { return cell_tag(objective, env) + ".csv"; }

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned workers,
                                const std::optional<std::filesystem::path>& tables_dir, bool require_tables) {
    cfg.validate();
    const std::vector<Cell> cells = cells_of(cfg);
    const std::size_t n_obj = cfg.objectives.size();
    std::vector<SweepRow> rows(cells.size() * n_obj);
    parallel_for(cells.size(), workers, [&](std::size_t c) {
        const Cell& cell = cells[c];
        const EnvParams env = cfg.cell(cell.epsilon, cell.q, cell.gamma);
        for (std::size_t o = 0; o < n_obj; ++o) {
            const Objective obj = cfg.objectives[o];
            const ValueTable table = obtain_table(obj, env, cfg.dp, tables_dir, require_tables);
            rows[c * n_obj + o] = {obj, cell.epsilon, cell.q, cell.gamma,
                                   run_ensemble(table, env, cfg.n_realizations, cfg.master_seed)};
            if (cfg.log_realizations > 0) {
                const auto records = run_records(table, env, cfg.log_realizations, cfg.master_seed);
                const auto path = cfg.output_dir / "realizations" / (cell_tag(obj, env) + ".csv");
                auto out = open_output(path);
                write_realization_log_csv(out, records);
                finish(out, path);
            }
        }
    });
    return rows;
}

std::vector<DifferentialRow> compute_differentials(std::span<const SweepRow> rows) {
    std::map<std::tuple<double, double, double>, const SweepRow*> rm;
    for (const SweepRow& r : rows) {
        if (r.objective == Objective::Rewardmax) rm[{r.gamma, r.epsilon, r.q}] = &r;
    }
    std::vector<DifferentialRow> out;
    for (const SweepRow& r : rows) {
        if (r.objective != Objective::Infomax) continue;
        const auto it = rm.find({r.gamma, r.epsilon, r.q});
        if (it == rm.end()) continue;
        out.push_back({r.epsilon, r.q, r.gamma, differentials(it->second->summary, r.summary)});
    }
    return out;
}

std::vector<AlignmentRow> run_alignment(const SweepConfig& cfg, unsigned workers) {
    cfg.validate();
    const std::vector<Cell> cells = cells_of(cfg);
    std::vector<AlignmentRow> rows(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t c) {
        const Cell& cell = cells[c];
        const EnvParams env = cfg.cell(cell.epsilon, cell.q, cell.gamma);
        const ValueTable rm = solve_policy(Objective::Rewardmax, env, cfg.dp);
        const ValueTable im = solve_policy(Objective::Infomax, env, cfg.dp);
        rows[c] = {cell.epsilon, cell.q, cell.gamma, cfg.driver,
                   run_alignment_ensemble(rm, im, env, cfg.n_realizations, cfg.master_seed, cfg.driver)};
    });
    return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << "objective,epsilon,q,gamma,burst_ratio_mean,rate_mean,rate_std,kappa,n\n";
    for (const SweepRow& r : rows) {
        const EnsembleSummary& s = r.summary;
        csv::write_row(os, {std::string(to_string(r.objective)), csv::format(r.epsilon), csv::format(r.q),
                            csv::format(r.gamma), csv::format(s.burst_ratio_mean), csv::format(s.rate_mean),
                            csv::format(s.rate_std), s.kappa.degenerate ? "degenerate" : csv::format(s.kappa.value),
                            std::to_string(s.n)});
    }
}

void write_differentials_csv(std::ostream& os, std::span<const DifferentialRow> rows) {
    os << "epsilon,q,gamma,delta_rho,delta_kappa\n";
    for (const DifferentialRow& r : rows) {
        csv::write_row(os, {csv::format(r.epsilon), csv::format(r.q), csv::format(r.gamma),
                            csv::format(r.diff.delta_rho),
                            r.diff.delta_kappa.degenerate ? "degenerate" : csv::format(r.diff.delta_kappa.value)});
    }
}

void write_alignment_csv(std::ostream& os, std::span<const AlignmentRow> rows) {
    os << "epsilon,q,gamma,driver,alignment_mean,n\n";
    for (const AlignmentRow& r : rows) {
        csv::write_row(os, {csv::format(r.epsilon), csv::format(r.q), csv::format(r.gamma),
                            std::string(to_string(r.driver)), csv::format(r.summary.alignment_mean),
                            std::to_string(r.summary.n)});
    }
}

void write_boundary_csv(std::ostream& os, const BoundaryCurve& curve) {
    os << "q,epsilon\n";
    for (const auto& p : curve.points) csv::write_row(os, {csv::format(p.q), csv::format(p.epsilon)});
}

void write_realization_log_csv(std::ostream& os, std::span<const RealizationRecord> records) {
    os << "realization_id,step_index,action,belief_llr,hidden_state,outcome,reward\n";
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& steps = records[r].steps;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const Step& s = steps[i];
            csv::write_row(os, {std::to_string(r), std::to_string(i), std::string(to_string(s.action)),
                                csv::format(s.llr_before), s.hidden_state == EnvState::SPlus ? "s_plus" : "s_minus",
                                std::string(to_string(s.outcome)), csv::format(s.reward)});
        }
    }
}

std::vector<std::filesystem::path> cmd_solve(const SweepConfig& cfg, unsigned workers) {
    cfg.validate();
    const std::vector<Cell> cells = cells_of(cfg);
    const std::size_t n_obj = cfg.objectives.size();
    std::vector<std::filesystem::path> paths(cells.size() * n_obj);
    parallel_for(cells.size(), workers, [&](std::size_t c) {
        const EnvParams env = cfg.cell(cells[c].epsilon, cells[c].q, cells[c].gamma);
        for (std::size_t o = 0; o < n_obj; ++o) {
            const ValueTable table = solve_policy(cfg.objectives[o], env, cfg.dp);
            const auto path = cfg.output_dir / "tables" / table_filename(cfg.objectives[o], env);
            auto out = open_output(path);
            write_table_csv(out, table);
            finish(out, path);
            paths[c * n_obj + o] = path;
        }
    });
    return paths;
}

std::vector<std::filesystem::path> cmd_sweep(const SweepConfig& cfg, unsigned workers,
                                             const std::optional<std::filesystem::path>& tables_dir,
                                             bool require_tables) {
    const std::vector<SweepRow> rows = run_sweep(cfg, workers, tables_dir, require_tables);
    std::vector<std::filesystem::path> written;
    const auto sweep_path = cfg.output_dir / "sweep.csv";
    auto out = open_output(sweep_path);
    write_sweep_csv(out, rows);
    finish(out, sweep_path);
    written.push_back(sweep_path);

    const std::vector<DifferentialRow> diffs = compute_differentials(rows);
    if (!diffs.empty()) {
        const auto diff_path = cfg.output_dir / "differentials.csv";
        auto dout = open_output(diff_path);
        write_differentials_csv(dout, diffs);
        finish(dout, diff_path);
        written.push_back(diff_path);
    }
    return written;
}

std::vector<std::filesystem::path> cmd_align(const SweepConfig& cfg, unsigned workers) {
    const std::vector<AlignmentRow> rows = run_alignment(cfg, workers);
    const auto path = cfg.output_dir / "alignment.csv";
    auto out = open_output(path);
    write_alignment_csv(out, rows);
    finish(out, path);
    return {path};
}

std::vector<std::filesystem::path> cmd_boundary(double h, std::span<const double> q_grid,
                                                const std::filesystem::path& output_dir) {
    const BoundaryCurve curve = phase_boundary(h, q_grid);
    const auto path = output_dir / "boundary.csv";
    auto out = open_output(path);
    write_boundary_csv(out, curve);
    finish(out, path);
    return {path};
}

}  // namespace seqforage
