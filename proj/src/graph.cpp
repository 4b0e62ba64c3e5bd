#include "tdaop/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace tdaop {

std::span<const int> TDGraph::out_arcs(int v) const {
  auto i = static_cast<std::size_t>(v);
  return {out_arcs_.data() + out_index_[i],
          static_cast<std::size_t>(out_index_[i + 1] - out_index_[i])};
}

std::span<const int> TDGraph::in_arcs(int v) const {
  auto i = static_cast<std::size_t>(v);
  return {in_arcs_.data() + in_index_[i],
          static_cast<std::size_t>(in_index_[i + 1] - in_index_[i])};
}

int TDGraph::find_arc(int tail, int head) const {
  for (int a : out_arcs(tail)) {
    if (arcs_[static_cast<std::size_t>(a)].head == head) return a;
  }
  return -1;
}

double TDGraph::euclidean(int u, int v) const {
  const auto& cu = vertex(u).coord;
  const auto& cv = vertex(v).coord;
  if (!cu || !cv) throw std::logic_error("euclidean distance needs coordinates");
  return std::hypot(cu->x - cv->x, cu->y - cv->y);
}

int GraphBuilder::add_vertex() {
  vertices_.push_back(Vertex{static_cast<int>(vertices_.size()), std::nullopt});
  return vertices_.back().id;
}

int GraphBuilder::add_vertex(double x, double y) {
  vertices_.push_back(Vertex{static_cast<int>(vertices_.size()), Point{x, y}});
  return vertices_.back().id;
}

int GraphBuilder::add_arc(int tail, int head, StepProfile tt, StepProfile val) {
  arcs_.push_back(Arc{tail, head, std::move(tt), std::move(val)});
  return static_cast<int>(arcs_.size()) - 1;
}

int GraphBuilder::add_arc(int tail, int head, StepProfile tt) {
  double step = tt.step_width();
  return add_arc(tail, head, std::move(tt), StepProfile(step, {0.0}));
}

void GraphBuilder::set_value_profile(int arc, StepProfile val) {
  arcs_.at(static_cast<std::size_t>(arc)).val = std::move(val);
}

TDGraph GraphBuilder::build() const {
  TDGraph g;
  g.vertices_ = vertices_;
  g.arcs_ = arcs_;

  const int n = static_cast<int>(vertices_.size());
  std::size_t with_coord = 0;
  for (const auto& v : vertices_) {
    if (v.coord) ++with_coord;
  }
  if (with_coord != 0 && with_coord != vertices_.size()) {
    throw std::invalid_argument("coordinates must be present for all vertices or none");
  }
  g.has_coords_ = with_coord == vertices_.size() && !vertices_.empty();

  std::unordered_set<long long> seen_pairs;
  seen_pairs.reserve(arcs_.size() * 2);
  for (const auto& a : g.arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.tail == a.head) throw std::invalid_argument("self loops are not allowed");
    long long key = static_cast<long long>(a.tail) * n + a.head;
    if (!seen_pairs.insert(key).second) {
      throw std::invalid_argument("parallel arc for vertex pair");
    }
    if (!(a.tt.min_value() > 0.0)) {
      throw std::invalid_argument("travel time windows must be strictly positive");
    }
  }

  g.out_index_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.in_index_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : g.arcs_) {
    ++g.out_index_[static_cast<std::size_t>(a.tail) + 1];
    ++g.in_index_[static_cast<std::size_t>(a.head) + 1];
  }
  for (int v = 0; v < n; ++v) {
    g.out_index_[static_cast<std::size_t>(v) + 1] += g.out_index_[static_cast<std::size_t>(v)];
    g.in_index_[static_cast<std::size_t>(v) + 1] += g.in_index_[static_cast<std::size_t>(v)];
  }
  g.out_arcs_.resize(g.arcs_.size());
  g.in_arcs_.resize(g.arcs_.size());
  std::vector<int> out_cursor(g.out_index_.begin(), g.out_index_.end() - 1);
  std::vector<int> in_cursor(g.in_index_.begin(), g.in_index_.end() - 1);
  for (int a = 0; a < static_cast<int>(g.arcs_.size()); ++a) {
    const auto& arc = g.arcs_[static_cast<std::size_t>(a)];
    g.out_arcs_[static_cast<std::size_t>(out_cursor[static_cast<std::size_t>(arc.tail)]++)] = a;
    g.in_arcs_[static_cast<std::size_t>(in_cursor[static_cast<std::size_t>(arc.head)]++)] = a;
  }

  // A piecewise-constant arc is non-FIFO exactly where a window value drops
  // below its predecessor: departing just before the boundary then arrives
  // later than departing at it.
  for (int a = 0; a < static_cast<int>(g.arcs_.size()); ++a) {
    const auto& vals = g.arcs_[static_cast<std::size_t>(a)].tt.values();
    for (std::size_t k = 1; k < vals.size(); ++k) {
      if (vals[k] < vals[k - 1]) {
        g.non_fifo_.push_back(a);
        break;
      }
    }
  }

  if (g.has_coords_) {
    double ms = 0.0;
    for (const auto& a : g.arcs_) {
      double d = g.euclidean(a.tail, a.head);
      ms = std::max(ms, d / a.tt.min_value());
    }
    if (ms > 0.0) g.max_speed_ = ms;
  }
  return g;
}

TDGraph staticize(const TDGraph& g) {
  GraphBuilder b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(static_cast<int>(v));
    if (vx.coord) {
      b.add_vertex(vx.coord->x, vx.coord->y);
    } else {
      b.add_vertex();
    }
  }
  for (const auto& a : g.arcs()) {
    b.add_arc(a.tail, a.head, a.tt.averaged(), a.val.averaged());
  }
  return b.build();
}

}  // namespace tdaop
