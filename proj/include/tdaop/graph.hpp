#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdaop/profile.hpp"

namespace tdaop {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct Vertex {
  int id = -1;
  std::optional<Point> coord;
};

// Directed arc with a travel-time profile (seconds, strictly positive) and a
// value profile (dimensionless, >= 0). The two profiles may use different
// step widths.
struct Arc {
  int tail = -1;
  int head = -1;
  StepProfile tt;
  StepProfile val;
};

// Immutable time-dependent road network. Safe to share across concurrent
// queries once built.
class TDGraph {
public:
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Arc& arc(int a) const { return arcs_.at(static_cast<std::size_t>(a)); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const int> out_arcs(int v) const;
  std::span<const int> in_arcs(int v) const;

  bool has_coords() const { return has_coords_; }
  // Network maximum speed (m/s), derived from geometry and minimum window
  // travel times. Present only when coordinates are.
  std::optional<double> max_speed() const { return max_speed_; }

  // Arcs with at least one window boundary where departing later arrives
  // earlier. Reported, never rejected.
  const std::vector<int>& non_fifo_arcs() const { return non_fifo_; }

  // Arc index for (tail, head), or -1.
  int find_arc(int tail, int head) const;

  double euclidean(int u, int v) const;

  bool valid_vertex(int v) const {
    return v >= 0 && static_cast<std::size_t>(v) < vertices_.size();
  }

private:
  friend class GraphBuilder;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<int> out_index_;   // CSR offsets, size |V|+1
  std::vector<int> out_arcs_;
  std::vector<int> in_index_;
  std::vector<int> in_arcs_;
  std::vector<int> non_fifo_;
  bool has_coords_ = false;
  std::optional<double> max_speed_;
};

// Accumulates vertices and arcs, then validates and freezes a TDGraph:
// dense ids, no self loops, no parallel arcs, strictly positive travel
// times, all-or-none coordinates.
class GraphBuilder {
public:
  int add_vertex();
  int add_vertex(double x, double y);
  int add_arc(int tail, int head, StepProfile tt, StepProfile val);
  // Travel-time-only convenience; value defaults to a constant 0 profile.
  int add_arc(int tail, int head, StepProfile tt);

  void set_value_profile(int arc, StepProfile val);

  TDGraph build() const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
};

// Replaces every profile by its single-window mean; basis of the static
// baseline.
TDGraph staticize(const TDGraph& g);

}  // namespace tdaop
