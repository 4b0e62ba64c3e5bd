#pragma once

#include <optional>

#include "tdaop/path.hpp"

namespace tdaop {

enum class PathMode {
  vertex_simple,  // no vertex visited twice (matches the integer model)
  arc_simple,     // no arc traversed twice (matches the path definition)
};

struct OracleConfig {
  PathMode mode = PathMode::vertex_simple;
  bool prune = true;
  std::optional<long> node_limit;
};

struct OracleResult {
  double optimal_value = 0.0;
  TimedPath optimal_path;
  long explored_nodes = 0;
  double wall_time = 0.0;
  bool complete = true;  // false when node_limit cut the search; carries the incumbent
};

// Exhaustive depth-first search over simple paths, exact on any profiles.
// Pruning uses admissible bounds that hold regardless of FIFO behaviour:
// a backward minimum-travel-time bound on remaining time, and the sum of
// maximum window values of not-yet-traversed candidate arcs as a value
// bound. Returns nullopt iff no feasible path exists. If node_limit cuts
// the search, the incumbent is returned with complete = false; hitting the
// limit before any feasible path throws.
std::optional<OracleResult> exact_solve(const TDGraph& g, const Query& q,
                                        const OracleConfig& cfg = {});

}  // namespace tdaop
