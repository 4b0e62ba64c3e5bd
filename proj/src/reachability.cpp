#include "tdaop/reachability.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace tdaop {

namespace {

struct MinFirst {
  bool operator()(const std::pair<double, int>& a, const std::pair<double, int>& b) const {
    return a > b;  // smallest time, then smallest id on top
  }
};

struct MaxFirst {
  bool operator()(const std::pair<double, int>& a, const std::pair<double, int>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;  // largest time, then smallest id on top
  }
};

bool vertex_allowed(const std::vector<char>* allowed, int v) {
  return allowed == nullptr || (*allowed)[static_cast<std::size_t>(v)] != 0;
}

}  // namespace

double fwest_bound(const TDGraph& g, int v, int target, double ea_v) {
  if (!g.has_coords() || !g.max_speed()) {
    throw std::logic_error("forward estimation needs coordinates and a maximum speed");
  }
  return ea_v + g.euclidean(v, target) / *g.max_speed();
}

std::optional<double> latest_entry_before(const StepProfile& tt, double latest_arrival,
                                          double epsilon) {
  if (!(latest_arrival > 0.0)) return std::nullopt;
  auto last = static_cast<long long>(tt.window_count()) - 1;
  // Latest window whose start lies strictly below the arrival bound.
  long long k = static_cast<long long>(tt.window_index(latest_arrival));
  if (tt.window_start(static_cast<std::size_t>(k)) >= latest_arrival) --k;
  while (k >= 0 &&
         tt.window_start(static_cast<std::size_t>(k)) + tt.values()[static_cast<std::size_t>(k)] >
             latest_arrival) {
    --k;
  }
  if (k < 0) return std::nullopt;
  double candidate = latest_arrival - tt.values()[static_cast<std::size_t>(k)];
  if (k < last) {
    double window_end = tt.window_start(static_cast<std::size_t>(k + 1));
    // Departing at or past the window end would hit the next (already
    // rejected) window; pull back just inside this one.
    if (candidate >= window_end) candidate = window_end - epsilon;
  }
  return candidate;
}

ReachLabels fwr(const TDGraph& g, int source, double t0, double deadline,
                const PruneConfig& cfg, std::optional<int> fwest_target,
                const std::vector<char>* allowed) {
  if (!g.valid_vertex(source)) throw std::invalid_argument("fwr: source out of range");
  if (deadline < t0) throw std::invalid_argument("fwr: deadline before departure");
  if (cfg.fwest_enabled && (!fwest_target || !g.has_coords() || !g.max_speed())) {
    throw std::logic_error("fwr: FWEST needs a target, coordinates and a maximum speed");
  }

  ReachLabels out;
  out.ea = LabelMap(g.vertex_count());
  std::vector<char> finalized(g.vertex_count(), 0);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>, MinFirst> q;

  out.ea.set(source, t0);
  q.push({t0, source});
  while (!q.empty()) {
    auto [t, v] = q.top();
    q.pop();
    if (t != out.ea.at(v)) continue;  // stale entry
    auto vi = static_cast<std::size_t>(v);
    if (finalized[vi]) continue;
    finalized[vi] = 1;
    ++out.visited_forward_count;
    for (int a : g.out_arcs(v)) {
      const Arc& arc = g.arc(a);
      if (!vertex_allowed(allowed, arc.head)) continue;
      if (finalized[static_cast<std::size_t>(arc.head)]) continue;
      double reach = t + arc.tt(t);
      if (reach > deadline) continue;
      if (cfg.fwest_enabled &&
          fwest_bound(g, arc.head, *fwest_target, reach) > deadline) {
        continue;
      }
      if (!out.ea.contains(arc.head) || reach < out.ea.at(arc.head)) {
        out.ea.set(arc.head, reach);
        q.push({reach, arc.head});
      }
    }
  }
  return out;
}

ReachLabels bwr(const TDGraph& g, int dest, double t0, double latest_arrival,
                const PruneConfig& cfg, const ReachLabels* fwd,
                std::optional<int> fwest_source, const std::vector<char>* allowed) {
  if (!g.valid_vertex(dest)) throw std::invalid_argument("bwr: destination out of range");
  if (latest_arrival < t0) throw std::invalid_argument("bwr: arrival bound before departure");
  if (cfg.eald_enabled && fwd == nullptr) {
    throw std::logic_error("bwr: EALD needs forward labels");
  }
  bool use_fwest = cfg.fwest_enabled && !cfg.eald_enabled;
  if (use_fwest && (!fwest_source || !g.has_coords() || !g.max_speed())) {
    throw std::logic_error("bwr: FWEST needs a source, coordinates and a maximum speed");
  }

  ReachLabels out;
  out.ld = LabelMap(g.vertex_count());
  std::vector<char> finalized(g.vertex_count(), 0);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>, MaxFirst> q;

  out.ld.set(dest, latest_arrival);
  q.push({latest_arrival, dest});
  while (!q.empty()) {
    auto [t, v] = q.top();
    q.pop();
    if (t != out.ld.at(v)) continue;
    auto vi = static_cast<std::size_t>(v);
    if (finalized[vi]) continue;
    finalized[vi] = 1;
    ++out.visited_backward_count;
    for (int a : g.in_arcs(v)) {
      const Arc& arc = g.arc(a);
      if (!vertex_allowed(allowed, arc.tail)) continue;
      if (finalized[static_cast<std::size_t>(arc.tail)]) continue;
      auto departure = latest_entry_before(arc.tt, t, cfg.epsilon);
      if (!departure || *departure < t0) continue;
      if (cfg.eald_enabled &&
          (!fwd->ea.contains(arc.tail) || *departure < fwd->ea.at(arc.tail))) {
        continue;
      }
      if (use_fwest &&
          t0 + g.euclidean(*fwest_source, arc.tail) / *g.max_speed() > *departure) {
        continue;
      }
      if (!out.ld.contains(arc.tail) || *departure > out.ld.at(arc.tail)) {
        out.ld.set(arc.tail, *departure);
        q.push({*departure, arc.tail});
      }
    }
  }
  return out;
}

ReachLabels intersect(const TDGraph& g, const ReachLabels& f, const ReachLabels& b) {
  ReachLabels out;
  out.ea = LabelMap(g.vertex_count());
  out.ld = LabelMap(g.vertex_count());
  out.visited_forward_count = f.visited_forward_count;
  out.visited_backward_count = b.visited_backward_count;
  for (int v : f.ea.ids()) {
    if (!b.ld.contains(v)) continue;
    double ea_v = f.ea.at(v);
    double ld_v = b.ld.at(v);
    if (ea_v <= ld_v) {
      out.ea.set(v, ea_v);
      out.ld.set(v, ld_v);
    }
  }
  return out;
}

}  // namespace tdaop
