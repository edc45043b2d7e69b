#include "seqforage/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "seqforage/csv.hpp"
#include "seqforage/errors.hpp"

namespace seqforage {

std::vector<double> parse_grid(std::string_view text, std::string_view field) {
    text = csv::trim(text);
    std::vector<double> out;
    constexpr std::string_view kLinspace = "linspace(";
    if (text.rfind(kLinspace, 0) == 0) {
        if (text.back() != ')') throw ConfigError(std::string(field), "unterminated linspace(...)");
        const auto args = csv::split(text.substr(kLinspace.size(), text.size() - kLinspace.size() - 1));
        if (args.size() != 3) throw ConfigError(std::string(field), "linspace needs (start, stop, count)");
        const double a = csv::parse_double(args[0], field);
        const double b = csv::parse_double(args[1], field);
        const long long n = csv::parse_int(args[2], field);
        if (n < 1) throw ConfigError(std::string(field), "linspace count must be positive");
        if (n == 1) return {a};
        const auto m = static_cast<double>(n - 1);
        for (long long i = 0; i < n; ++i) {
            // One rounding per point: (a (m - i) + b i) / m.
            out.push_back((a * (m - static_cast<double>(i)) + b * static_cast<double>(i)) / m);
        }
        return out;
    }
    for (std::string_view tok : csv::split(text)) out.push_back(csv::parse_double(tok, field));
    return out;
}

namespace {

std::string indexed(std::string_view field, std::size_t i) {
    return std::string(field) + "[" + std::to_string(i) + "]";
}

void require_grid(const std::vector<double>& grid, std::string_view field, double lo, double hi) {
    if (grid.empty()) throw ConfigError(std::string(field), "must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || grid[i] < lo || grid[i] > hi) {
            throw ConfigError(indexed(field, i),
                              "value " + csv::format(grid[i]) + " outside [" + csv::format(lo) + ", " + csv::format(hi) + "]");
        }
    }
}

}  // namespace

void SweepConfig::validate() const {
    try {
        base.validate();
    } catch (const ConfigError& e) {
        throw ConfigError("base." + e.field(), std::string(e.what()).substr(e.field().size() + 2));
    }
    try {
        dp.validate();
    } catch (const ConfigError& e) {
        throw ConfigError("dp." + e.field(), std::string(e.what()).substr(e.field().size() + 2));
    }
    require_grid(epsilon_grid, "sweep.epsilon_grid", 0.0, 0.5);
    require_grid(q_grid, "sweep.q_grid", 0.5, 1.0);
    require_grid(gamma_list, "sweep.gamma_list", 0.0, 1.0);
    if (objectives.empty()) throw ConfigError("sweep.objectives", "must not be empty");
    if (n_realizations < 1) throw ConfigError("sweep.n_realizations", "must be at least 1");
}

EnvParams SweepConfig::cell(double epsilon, double q, double gamma) const {
    EnvParams env = base;
    env.epsilon = epsilon;
    env.q = q;
    env.gamma = gamma;
    return env;
}

SweepConfig parse_config(std::istream& is) {
    SweepConfig cfg;
    using Setter = std::function<void(std::string_view, const std::string&)>;
    auto real = [](double& dst) -> Setter {
        return [&dst](std::string_view v, const std::string& f) { dst = csv::parse_double(v, f); };
    };
    auto integer = [](int& dst) -> Setter {
        return [&dst](std::string_view v, const std::string& f) { dst = static_cast<int>(csv::parse_int(v, f)); };
    };
    auto count = [](std::size_t& dst) -> Setter {
        return [&dst](std::string_view v, const std::string& f) {
            const long long n = csv::parse_int(v, f);
            if (n < 0) throw ConfigError(f, "must not be negative");
            dst = static_cast<std::size_t>(n);
        };
    };
    auto grid = [](std::vector<double>& dst) -> Setter {
        return [&dst](std::string_view v, const std::string& f) { dst = parse_grid(v, f); };
    };

    const std::map<std::string, Setter, std::less<>> setters{
        {"base.epsilon", real(cfg.base.epsilon)},
        {"base.q", real(cfg.base.q)},
        {"base.h", real(cfg.base.h)},
        {"base.r_plus", real(cfg.base.r_plus)},
        {"base.r_minus", real(cfg.base.r_minus)},
        {"base.tau_d", integer(cfg.base.tau_d)},
        {"base.tau_s", integer(cfg.base.tau_s)},
        {"base.budget_n", integer(cfg.base.budget_n)},
        {"base.gamma", real(cfg.base.gamma)},
        {"sweep.epsilon_grid", grid(cfg.epsilon_grid)},
        {"sweep.q_grid", grid(cfg.q_grid)},
        {"sweep.gamma_list", grid(cfg.gamma_list)},
        {"sweep.objectives",
         [&cfg](std::string_view v, const std::string&) {
             cfg.objectives.clear();
             for (std::string_view tok : csv::split(v)) cfg.objectives.push_back(parse_objective(csv::trim(tok)));
         }},
        {"sweep.n_realizations", count(cfg.n_realizations)},
        {"sweep.master_seed",
         [&cfg](std::string_view v, const std::string& f) {
             const long long s = csv::parse_int(v, f);
             if (s < 0) throw ConfigError(f, "must not be negative");
             cfg.master_seed = static_cast<std::uint64_t>(s);
         }},
        {"sweep.driver", [&cfg](std::string_view v, const std::string&) { cfg.driver = parse_driver(v); }},
        {"sweep.output_dir", [&cfg](std::string_view v, const std::string&) { cfg.output_dir = std::string(v); }},
        {"sweep.log_realizations", count(cfg.log_realizations)},
        {"dp.grid_points", integer(cfg.dp.grid_points)},
        {"dp.max_reachable_nodes", count(cfg.dp.max_reachable_nodes)},
        {"dp.interpolation",
         [](std::string_view v, const std::string& f) {
             if (v != "linear") throw ConfigError(f, "only 'linear' is supported");
         }},
        {"dp.tie_break",
         [](std::string_view v, const std::string& f) {
             if (v != "prefer_commit") throw ConfigError(f, "only 'prefer_commit' is supported");
         }},
    };

    std::set<std::string, std::less<>> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = csv::trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        }
        const std::string key(csv::trim(text.substr(0, eq)));
        const std::string_view value = csv::trim(text.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError(key, "unknown configuration key");
        if (!seen.insert(key).second) throw ConfigError(key, "specified twice");
        it->second(value, key);
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open " + path.string());
    return parse_config(in);
}

}  // namespace seqforage
