#pragma once

#include <optional>

#include "tdaop/path.hpp"

namespace tdaop {

// Time-dependent fastest path under entry-window semantics, via
// single-direction label-setting search with parent links. Ties break on
// smaller vertex id, so identical inputs give identical paths. Returns
// nullopt when dest is unreachable.
std::optional<TimedPath> td_fastest_path(const TDGraph& g, int source, int dest, double t0,
                                         const std::vector<char>* allowed = nullptr);

}  // namespace tdaop
