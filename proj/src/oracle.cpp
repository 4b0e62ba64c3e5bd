#include "tdaop/oracle.hpp"

#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tdaop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra over per-arc minimum window travel times; admissible on any
// profiles since no traversal can beat its cheapest window.
std::vector<double> min_time_bound(const TDGraph& g, int root, bool backward) {
  std::vector<double> dist(g.vertex_count(), kInf);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                      std::greater<>>
      q;
  dist[static_cast<std::size_t>(root)] = 0.0;
  q.push({0.0, root});
  while (!q.empty()) {
    auto [d, v] = q.top();
    q.pop();
    if (d != dist[static_cast<std::size_t>(v)]) continue;
    auto arcs = backward ? g.in_arcs(v) : g.out_arcs(v);
    for (int a : arcs) {
      const Arc& arc = g.arc(a);
      int next = backward ? arc.tail : arc.head;
      double nd = d + arc.tt.min_value();
      if (nd < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = nd;
        q.push({nd, next});
      }
    }
  }
  return dist;
}

struct Dfs {
  const TDGraph& g;
  const Query& q;
  const OracleConfig& cfg;
  double horizon;
  std::vector<double> remaining;  // admissible remaining-time bound
  std::vector<double> arc_cap;    // max window value of usable arcs, 0 otherwise
  std::vector<char> blocked;      // visited vertices or traversed arcs
  std::vector<int> current;
  double best_value = -1.0;
  std::vector<int> best_arcs;
  long explored = 0;
  bool complete = true;
  double ub_remaining = 0.0;

  void expand(int v, double t, double value) {
    if (!complete) return;
    if (cfg.node_limit && explored >= *cfg.node_limit) {
      complete = false;
      return;
    }
    ++explored;
    if (v == q.destination && value > best_value) {
      best_value = value;
      best_arcs = current;
    }
    if (cfg.mode == PathMode::vertex_simple && v == q.destination && !current.empty()) {
      // Leaving the destination would have to revisit it.
      return;
    }
    if (cfg.prune && value + ub_remaining <= best_value) return;
    for (int a : g.out_arcs(v)) {
      const Arc& arc = g.arc(a);
      std::size_t block_key = cfg.mode == PathMode::vertex_simple
                                  ? static_cast<std::size_t>(arc.head)
                                  : static_cast<std::size_t>(a);
      if (blocked[block_key]) continue;
      double arrive = t + arc.tt(t);
      if (arrive > horizon) continue;
      if (cfg.prune && arrive + remaining[static_cast<std::size_t>(arc.head)] > horizon) {
        continue;
      }
      double cap = arc_cap[static_cast<std::size_t>(a)];
      blocked[block_key] = 1;
      current.push_back(a);
      ub_remaining -= cap;
      expand(arc.head, arrive, value + arc.val(t));
      ub_remaining += cap;
      current.pop_back();
      blocked[block_key] = 0;
      if (!complete) return;
    }
  }
};

}  // namespace

std::optional<OracleResult> exact_solve(const TDGraph& g, const Query& q,
                                        const OracleConfig& cfg) {
  validate_query(g, q);
  auto started = std::chrono::steady_clock::now();

  Dfs dfs{g, q, cfg, q.t0 + q.budget, {}, {}, {}, {}};
  dfs.remaining.assign(g.vertex_count(), 0.0);
  dfs.arc_cap.assign(g.arc_count(), 0.0);
  if (cfg.prune) {
    dfs.remaining = min_time_bound(g, q.destination, /*backward=*/true);
    auto forward = min_time_bound(g, q.source, /*backward=*/false);
    for (std::size_t a = 0; a < g.arc_count(); ++a) {
      const Arc& arc = g.arcs()[a];
      double through = forward[static_cast<std::size_t>(arc.tail)] + arc.tt.min_value() +
                       dfs.remaining[static_cast<std::size_t>(arc.head)];
      if (through <= q.budget) {
        dfs.arc_cap[a] = arc.val.max_value();
        dfs.ub_remaining += dfs.arc_cap[a];
      }
    }
  }

  std::size_t block_size =
      cfg.mode == PathMode::vertex_simple ? g.vertex_count() : g.arc_count();
  dfs.blocked.assign(block_size, 0);
  if (cfg.mode == PathMode::vertex_simple) {
    dfs.blocked[static_cast<std::size_t>(q.source)] = 1;
  }
  dfs.expand(q.source, q.t0, 0.0);

  if (dfs.best_value < 0.0) {
    if (!dfs.complete) {
      throw std::runtime_error("oracle: node limit reached before any feasible path was found");
    }
    return std::nullopt;
  }

  OracleResult res;
  res.optimal_value = dfs.best_value;
  res.optimal_path = make_path(g, q.source, dfs.best_arcs, q.t0);
  res.explored_nodes = dfs.explored;
  res.complete = dfs.complete;
  res.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return res;
}

}  // namespace tdaop
