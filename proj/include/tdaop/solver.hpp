#pragma once

#include <optional>
#include <span>

#include "tdaop/path.hpp"
#include "tdaop/reachability.hpp"

namespace tdaop {

// A (start, end) pair of the solver's skeleton awaiting either another arc
// insertion or a fastest-path stitch, with its time context.
struct Gap {
  int start = -1;
  int end = -1;
  double start_time = 0.0;    // earliest arrival at start along the skeleton
  double end_deadline = 0.0;  // latest admissible arrival at end
};

enum class RatioMode {
  value_per_detour,            // value over the slack the detour consumes
  value_per_remaining_budget,  // value over the budget left after insertion
};

struct SolverConfig {
  RatioMode ratio_mode = RatioMode::value_per_detour;
  bool restrict_recursion_graph = false;
  PruneConfig prune{.fwest_enabled = false, .eald_enabled = true, .epsilon = 1e-6};
  std::optional<int> max_recursions;
  std::optional<double> time_limit_seconds;
  double detour_floor = 1e-3;  // seconds, guards zero-detour ratios
};

struct InsertionCandidate {
  int arc = -1;
  int gap_index = -1;
  double b_minus = 0.0;   // budget left after taking the detour
  double val_plus = 0.0;  // value estimate at earliest entry
  double ratio = 0.0;
  // Derived at scoring time, used to split the gap.
  double arrival_at_head = 0.0;        // ea_tail + tt(ea_tail)
  double tail_latest_departure = 0.0;  // ld of the arc tail in the gap
};

struct SolveResult {
  TimedPath path;
  double value = 0.0;
  double travel_time = 0.0;
  int recursions = 0;
  std::vector<int> visited_vertex_counts;  // FWR+BWR dequeues per recursion
  double wall_time = 0.0;
  bool truncated = false;  // recursion cap or time limit hit
  int rollbacks = 0;
};

struct StitchOutcome {
  TimedPath path;
  bool complete = false;
  bool duplicate_arcs = false;
  int failed_gap = -1;  // gap whose segment was unreachable or missed its deadline
};

// Scores one feasibly insertable arc for a gap. labels must carry ea/ld for
// both endpoints (an intersection); returns nullopt when the arc cannot be
// inserted without exceeding the gap's bounds.
std::optional<InsertionCandidate> score_candidate(const TDGraph& g, const Gap& gap, int arc,
                                                  const ReachLabels& labels, double gap_slack,
                                                  const SolverConfig& cfg);

// Closes every gap with a fastest path and concatenates segments and
// inserted arcs in chain order, re-evaluating arrivals left to right.
// gaps[i] precedes arcs[i]; a zero-length gap contributes an empty segment.
// Repeated arc indices set duplicate_arcs (value is collected only on first
// traversal by path_value_first_traversal).
StitchOutcome stitch(const TDGraph& g, std::span<const Gap> gaps, std::span<const int> arcs,
                     double t0);

// Recursive best-ratio arc insertion: each recursion runs FWR/BWR per gap,
// inserts the globally best value-per-detour arc and splits its gap; when no
// arc qualifies, gaps are closed with fastest paths. Insertions whose stitch
// misses a deadline or duplicates an arc are rolled back and blacklisted, so
// any returned path is feasible and arc-simple. Returns nullopt iff the
// destination is unreachable within the budget.
std::optional<SolveResult> solve(const TDGraph& g, const Query& q, const SolverConfig& cfg = {});

}  // namespace tdaop
