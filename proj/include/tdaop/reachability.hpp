#pragma once

#include <optional>
#include <vector>

#include "tdaop/graph.hpp"

namespace tdaop {

// Partial map vertex id -> timestamp, dense-backed for O(1) lookups.
class LabelMap {
public:
  LabelMap() = default;
  explicit LabelMap(std::size_t n) : value_(n, 0.0), has_(n, 0) {}

  bool contains(int v) const { return has_[static_cast<std::size_t>(v)] != 0; }
  double at(int v) const { return value_[static_cast<std::size_t>(v)]; }

  void set(int v, double t) {
    auto i = static_cast<std::size_t>(v);
    if (!has_[i]) {
      has_[i] = 1;
      ids_.push_back(v);
    }
    value_[i] = t;
  }

  const std::vector<int>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

private:
  std::vector<double> value_;
  std::vector<char> has_;
  std::vector<int> ids_;
};

struct PruneConfig {
  bool fwest_enabled = false;  // needs coordinates and max_speed
  bool eald_enabled = false;
  double epsilon = 1e-6;  // window-boundary adjustment, seconds
};

// Labels from one forward/backward expansion. ea is filled by fwr, ld by
// bwr; intersect() carries both. Visited counts tally first-time dequeues
// for the pruning experiments.
struct ReachLabels {
  LabelMap ea;
  LabelMap ld;
  int visited_forward_count = 0;
  int visited_backward_count = 0;
};

// Earliest-arrival expansion from source departing at t0. Labels exactly the
// vertices with ea <= deadline (minus FWEST-pruned ones when enabled, which
// needs fwest_target). Dequeued labels are final; ties break on smaller id.
// `allowed`, when given, restricts the expansion to flagged vertices.
ReachLabels fwr(const TDGraph& g, int source, double t0, double deadline,
                const PruneConfig& cfg = {},
                std::optional<int> fwest_target = std::nullopt,
                const std::vector<char>* allowed = nullptr);

// Latest-departure expansion toward dest with arrival bound latest_arrival.
// Labels vertices with ld >= t0. With EALD enabled, `fwd` must carry the
// matching fwr labels and vertices with ld < ea are never enqueued. FWEST
// (using fwest_source) applies only when EALD is off.
ReachLabels bwr(const TDGraph& g, int dest, double t0, double latest_arrival,
                const PruneConfig& cfg = {}, const ReachLabels* fwd = nullptr,
                std::optional<int> fwest_source = std::nullopt,
                const std::vector<char>* allowed = nullptr);

// Vertices labeled on both sides with ea <= ld, carrying both labels. By the
// containment lemma this superset holds every vertex of every feasible path.
ReachLabels intersect(const TDGraph& g, const ReachLabels& f, const ReachLabels& b);

// Admissible lower bound on arrival at target via v: ea_v plus straight-line
// distance over the network maximum speed.
double fwest_bound(const TDGraph& g, int v, int target, double ea_v);

// Latest departure time t with t + tt(t) <= latest_arrival, scanning windows
// downward from the one just below latest_arrival. When the candidate falls
// at or beyond its window's end (the boundary special case) it is pulled
// back to end - epsilon. Returns nullopt if no window admits arrival.
std::optional<double> latest_entry_before(const StepProfile& tt, double latest_arrival,
                                          double epsilon);

}  // namespace tdaop
