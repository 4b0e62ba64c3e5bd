#include "tdaop/path.hpp"

#include <stdexcept>
#include <unordered_set>

namespace tdaop {

int end_vertex(const TDGraph& g, const TimedPath& p) {
  if (p.arcs.empty()) return p.start;
  return g.arc(p.arcs.back()).head;
}

void validate_structure(const TDGraph& g, const TimedPath& p) {
  if (!g.valid_vertex(p.start)) throw std::invalid_argument("path start out of range");
  int at = p.start;
  for (int a : p.arcs) {
    if (a < 0 || static_cast<std::size_t>(a) >= g.arc_count()) {
      throw std::invalid_argument("arc index out of range");
    }
    const Arc& arc = g.arc(a);
    if (arc.tail != at) throw std::invalid_argument("disconnected arc sequence");
    at = arc.head;
  }
}

double path_travel_time(const TDGraph& g, TimedPath& p) {
  validate_structure(g, p);
  p.arrivals.clear();
  p.arrivals.reserve(p.arcs.size() + 1);
  double t = p.t0;
  p.arrivals.push_back(t);
  for (int a : p.arcs) {
    t += g.arc(a).tt(t);
    p.arrivals.push_back(t);
  }
  return t - p.t0;
}

double path_travel_time(const TDGraph& g, const TimedPath& p) {
  validate_structure(g, p);
  double t = p.t0;
  for (int a : p.arcs) t += g.arc(a).tt(t);
  return t - p.t0;
}

double path_value(const TDGraph& g, const TimedPath& p) {
  validate_structure(g, p);
  double t = p.t0;
  double value = 0.0;
  for (int a : p.arcs) {
    const Arc& arc = g.arc(a);
    value += arc.val(t);
    t += arc.tt(t);
  }
  return value;
}

double path_value_first_traversal(const TDGraph& g, const TimedPath& p) {
  validate_structure(g, p);
  std::unordered_set<int> seen;
  double t = p.t0;
  double value = 0.0;
  for (int a : p.arcs) {
    const Arc& arc = g.arc(a);
    if (seen.insert(a).second) value += arc.val(t);
    t += arc.tt(t);
  }
  return value;
}

bool has_duplicate_arcs(const TimedPath& p) {
  std::unordered_set<int> seen;
  for (int a : p.arcs) {
    if (!seen.insert(a).second) return true;
  }
  return false;
}

bool is_feasible(const TDGraph& g, const TimedPath& p, const Query& q) {
  if (end_vertex(g, p) != q.destination) return false;
  return path_travel_time(g, p) <= q.budget;
}

TimedPath make_path(const TDGraph& g, int start, std::vector<int> arcs, double t0) {
  TimedPath p;
  p.start = start;
  p.t0 = t0;
  p.arcs = std::move(arcs);
  path_travel_time(g, p);
  return p;
}

void validate_query(const TDGraph& g, const Query& q) {
  if (!g.valid_vertex(q.source)) throw std::invalid_argument("query source out of range");
  if (!g.valid_vertex(q.destination)) throw std::invalid_argument("query destination out of range");
  if (q.t0 < 0.0) throw std::invalid_argument("departure time must be >= 0");
  if (q.budget < 0.0) throw std::invalid_argument("budget must be >= 0");
}

}  // namespace tdaop
