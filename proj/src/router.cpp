#include "tdaop/router.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tdaop {

std::optional<TimedPath> td_fastest_path(const TDGraph& g, int source, int dest, double t0,
                                         const std::vector<char>* allowed) {
  if (!g.valid_vertex(source) || !g.valid_vertex(dest)) {
    throw std::invalid_argument("fastest path: vertex out of range");
  }
  if (source == dest) return make_path(g, source, {}, t0);

  constexpr double kUnset = std::numeric_limits<double>::infinity();
  std::vector<double> arrival(g.vertex_count(), kUnset);
  std::vector<int> parent_arc(g.vertex_count(), -1);
  std::vector<char> finalized(g.vertex_count(), 0);

  auto cmp = [](const std::pair<double, int>& a, const std::pair<double, int>& b) {
    return a > b;
  };
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>, decltype(cmp)>
      q(cmp);

  arrival[static_cast<std::size_t>(source)] = t0;
  q.push({t0, source});
  while (!q.empty()) {
    auto [t, v] = q.top();
    q.pop();
    auto vi = static_cast<std::size_t>(v);
    if (t != arrival[vi] || finalized[vi]) continue;
    finalized[vi] = 1;
    if (v == dest) break;
    for (int a : g.out_arcs(v)) {
      const Arc& arc = g.arc(a);
      auto hi = static_cast<std::size_t>(arc.head);
      if (finalized[hi]) continue;
      if (allowed && !(*allowed)[hi]) continue;
      double reach = t + arc.tt(t);
      if (reach < arrival[hi]) {
        arrival[hi] = reach;
        parent_arc[hi] = a;
        q.push({reach, arc.head});
      }
    }
  }

  if (!finalized[static_cast<std::size_t>(dest)]) return std::nullopt;

  std::vector<int> arcs;
  for (int v = dest; v != source;) {
    int a = parent_arc[static_cast<std::size_t>(v)];
    arcs.push_back(a);
    v = g.arc(a).tail;
  }
  std::reverse(arcs.begin(), arcs.end());
  return make_path(g, source, std::move(arcs), t0);
}

}  // namespace tdaop
