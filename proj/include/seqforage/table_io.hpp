#pragma once

#include <iosfwd>

#include "seqforage/policy.hpp"

namespace seqforage {

// Table text format:
//
//   # seqforage-table objective=<name> epsilon=<x> q=<x> h=<x> r_plus=<x> r_minus=<x>
//     tau_d=<n> tau_s=<n> budget_n=<n> gamma=<x> grid_points=<n> max_reachable_nodes=<n>
//   k,p,llr,utility,action
//   0,3.0590222692562472e-07,-15,...,commit_minus
//
// The metadata is a single comment line (wrapped here). One data row per
// (k, node), k-major, nodes in increasing llr. `llr` is authoritative and
// round-trips exactly; `p` is derived from it.
void write_table_csv(std::ostream& os, const ValueTable& table);
ValueTable read_table_csv(std::istream& is);

}  // namespace seqforage
