#pragma once

#include <vector>

#include "tdaop/graph.hpp"

namespace tdaop {

struct Query {
  int source = -1;
  int destination = -1;
  double t0 = 0.0;    // departure timestamp, seconds
  double budget = 0.0;  // seconds
};

// Arc sequence plus departure time. Arrival times are derived: the path
// enters each arc at the arrival time of its tail (no waiting), so
// arrivals[i+1] = arrivals[i] + tt(arrivals[i]).
struct TimedPath {
  int start = -1;
  double t0 = 0.0;
  std::vector<int> arcs;
  std::vector<double> arrivals;  // size arcs.size()+1 once evaluated

  bool empty() const { return arcs.empty(); }
};

// End vertex of the path (start itself for an empty path).
int end_vertex(const TDGraph& g, const TimedPath& p);

// Checks chain consistency: start matches the first arc's tail and
// consecutive arcs share a vertex. Throws std::invalid_argument otherwise.
void validate_structure(const TDGraph& g, const TimedPath& p);

// Total travel time; fills p.arrivals as a side effect.
double path_travel_time(const TDGraph& g, TimedPath& p);
// Same, without storing arrivals.
double path_travel_time(const TDGraph& g, const TimedPath& p);

// Sum of each arc's value profile at the arc's entry time.
double path_value(const TDGraph& g, const TimedPath& p);

// Value counting repeated arc indices only on first traversal.
double path_value_first_traversal(const TDGraph& g, const TimedPath& p);

bool has_duplicate_arcs(const TimedPath& p);

// True iff p ends at q.destination and its travel time is within q.budget.
bool is_feasible(const TDGraph& g, const TimedPath& p, const Query& q);

TimedPath make_path(const TDGraph& g, int start, std::vector<int> arcs, double t0);

void validate_query(const TDGraph& g, const Query& q);

}  // namespace tdaop
