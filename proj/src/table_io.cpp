#include "seqforage/table_io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "seqforage/csv.hpp"
#include "seqforage/errors.hpp"

namespace seqforage {

namespace {

constexpr std::string_view kMagic = "# seqforage-table";
constexpr std::string_view kHeader = "k,p,llr,utility,action";

}  // namespace

void write_table_csv(std::ostream& os, const ValueTable& table) {
    if (!table.solved()) throw StateError("cannot write an unsolved table");
    const EnvParams& e = table.env();
    os << kMagic << " objective=" << to_string(table.objective()) << " epsilon=" << csv::format(e.epsilon)
       << " q=" << csv::format(e.q) << " h=" << csv::format(e.h) << " r_plus=" << csv::format(e.r_plus)
       << " r_minus=" << csv::format(e.r_minus) << " tau_d=" << e.tau_d << " tau_s=" << e.tau_s
       << " budget_n=" << e.budget_n << " gamma=" << csv::format(e.gamma)
       << " grid_points=" << table.dp().grid_points << " max_reachable_nodes=" << table.dp().max_reachable_nodes
       << '\n'
       << kHeader << '\n';
    const auto nodes = table.llr_nodes();
    for (int k = 0; k <= table.horizon(); ++k) {
        const auto u = table.utility_row(k);
        const auto a = table.action_row(k);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            os << k << ',' << csv::format(likelihood_from_llr(nodes[i])) << ',' << csv::format(nodes[i]) << ','
               << csv::format(u[i]) << ',' << to_string(a[i]) << '\n';
        }
    }
}

ValueTable read_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind(kMagic, 0) != 0) {
        throw StateError("not a seqforage table (missing metadata line)");
    }
    std::map<std::string, std::string, std::less<>> meta;
    for (std::string_view tok : csv::split(std::string_view(line).substr(kMagic.size()), ' ')) {
        tok = csv::trim(tok);
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) throw StateError("bad metadata token '" + std::string(tok) + "'");
        meta.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
    }
    auto get = [&](const char* key) -> std::string_view {
        const auto it = meta.find(key);
        if (it == meta.end()) throw StateError(std::string("table metadata lacks ") + key);
        return it->second;
    };
    const Objective objective = parse_objective(get("objective"));
    EnvParams env;
    env.epsilon = csv::parse_double(get("epsilon"), "epsilon");
    env.q = csv::parse_double(get("q"), "q");
    env.h = csv::parse_double(get("h"), "h");
    env.r_plus = csv::parse_double(get("r_plus"), "r_plus");
    env.r_minus = csv::parse_double(get("r_minus"), "r_minus");
    env.tau_d = static_cast<int>(csv::parse_int(get("tau_d"), "tau_d"));
    env.tau_s = static_cast<int>(csv::parse_int(get("tau_s"), "tau_s"));
    env.budget_n = static_cast<int>(csv::parse_int(get("budget_n"), "budget_n"));
    env.gamma = csv::parse_double(get("gamma"), "gamma");
    env.validate();
    DPConfig dp;
    dp.grid_points = static_cast<int>(csv::parse_int(get("grid_points"), "grid_points"));
    dp.max_reachable_nodes = static_cast<std::size_t>(csv::parse_int(get("max_reachable_nodes"), "max_reachable_nodes"));

    if (!std::getline(is, line) || csv::trim(line) != kHeader) throw StateError("table header row missing");

    std::vector<double> nodes;
    std::vector<double> utility;
    std::vector<Action> actions;
    int expected_k = 0;
    while (std::getline(is, line)) {
        if (csv::trim(line).empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 5) throw StateError("table row needs 5 fields: '" + line + "'");
        const int k = static_cast<int>(csv::parse_int(f[0], "k"));
        const double llr = csv::parse_double(f[2], "llr");
        if (k != expected_k) {
            if (k != expected_k + 1 || utility.size() != nodes.size() * static_cast<std::size_t>(k)) {
                throw StateError("table rows out of order at k=" + std::to_string(k));
            }
            expected_k = k;
        }
        if (k == 0) nodes.push_back(llr);
        else if (nodes[utility.size() % nodes.size()] != llr) throw StateError("table node mismatch across rows");
        utility.push_back(csv::parse_double(f[3], "utility"));
        actions.push_back(parse_action(csv::trim(f[4])));
    }
    return ValueTable::from_parts(objective, env, dp, std::move(nodes), std::move(utility), std::move(actions));
}

}  // namespace seqforage
