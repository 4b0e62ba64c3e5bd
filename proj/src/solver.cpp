#include "tdaop/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tdaop/router.hpp"

namespace tdaop {

std::optional<InsertionCandidate> score_candidate(const TDGraph& g, const Gap& gap, int arc,
                                                  const ReachLabels& labels, double gap_slack,
                                                  const SolverConfig& cfg) {
  const Arc& a = g.arc(arc);
  if (!labels.ea.contains(a.tail) || !labels.ld.contains(a.head) ||
      !labels.ld.contains(a.tail)) {
    return std::nullopt;
  }
  double entry = labels.ea.at(a.tail);
  double arrival = entry + a.tt(entry);
  double ld_head = labels.ld.at(a.head);
  if (arrival > ld_head) return std::nullopt;
  if (entry < gap.start_time || arrival > gap.end_deadline) return std::nullopt;

  InsertionCandidate c;
  c.arc = arc;
  c.b_minus = ld_head - arrival;
  c.val_plus = a.val(entry);
  c.arrival_at_head = arrival;
  c.tail_latest_departure = labels.ld.at(a.tail);
  double denom;
  if (cfg.ratio_mode == RatioMode::value_per_remaining_budget) {
    denom = std::max(c.b_minus, cfg.detour_floor);
  } else {
    double detour = std::max(gap_slack - c.b_minus, 0.0);
    denom = std::max(detour, cfg.detour_floor);
  }
  c.ratio = c.val_plus / denom;
  return c;
}

StitchOutcome stitch(const TDGraph& g, std::span<const Gap> gaps, std::span<const int> arcs,
                     double t0) {
  if (gaps.size() != arcs.size() + 1) {
    throw std::invalid_argument("stitch: gaps and arcs must alternate");
  }
  StitchOutcome out;
  out.path.start = gaps[0].start;
  out.path.t0 = t0;
  out.path.arrivals.push_back(t0);
  double t = t0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const Gap& gap = gaps[i];
    if (gap.start != gap.end) {
      auto seg = td_fastest_path(g, gap.start, gap.end, t);
      if (!seg) {
        out.failed_gap = static_cast<int>(i);
        return out;
      }
      for (std::size_t j = 0; j < seg->arcs.size(); ++j) {
        out.path.arcs.push_back(seg->arcs[j]);
        out.path.arrivals.push_back(seg->arrivals[j + 1]);
      }
      t = seg->arrivals.back();
    }
    if (t > gap.end_deadline) {
      out.failed_gap = static_cast<int>(i);
      return out;
    }
    if (i < arcs.size()) {
      const Arc& a = g.arc(arcs[i]);
      if (a.tail != gap.end) throw std::invalid_argument("stitch: chain mismatch");
      out.path.arcs.push_back(arcs[i]);
      t += a.tt(t);
      out.path.arrivals.push_back(t);
    }
  }
  out.complete = true;
  out.duplicate_arcs = has_duplicate_arcs(out.path);
  return out;
}

namespace {

struct InsertionRecord {
  int gap_index;
  Gap parent;
  int arc;
};

}  // namespace

std::optional<SolveResult> solve(const TDGraph& g, const Query& q, const SolverConfig& cfg) {
  validate_query(g, q);
  if (cfg.max_recursions && *cfg.max_recursions < 1) {
    throw std::invalid_argument("solve: max_recursions must be >= 1");
  }
  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  const double horizon = q.t0 + q.budget;
  std::vector<Gap> gaps{{q.source, q.destination, q.t0, horizon}};
  std::vector<int> inserted;
  std::vector<InsertionRecord> history;
  std::vector<char> blacklist(g.arc_count(), 0);
  std::vector<char> in_chain(g.arc_count(), 0);

  std::optional<std::vector<char>> allowed;
  auto allowed_ptr = [&]() -> const std::vector<char>* {
    return allowed ? &*allowed : nullptr;
  };

  SolveResult result;

  auto capped = [&] {
    if (cfg.max_recursions && result.recursions >= *cfg.max_recursions) return true;
    if (cfg.time_limit_seconds && elapsed() >= *cfg.time_limit_seconds) return true;
    return false;
  };

  while (true) {
    std::optional<InsertionCandidate> best;
    if (!capped()) {
      ++result.recursions;
      int visited_here = 0;
      std::vector<char> next_allowed(g.vertex_count(), 0);
      for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
        const Gap& gap = gaps[gi];
        if (gap.start == gap.end) continue;  // already an empty segment
        auto f = fwr(g, gap.start, gap.start_time, gap.end_deadline, cfg.prune, gap.end,
                     allowed_ptr());
        auto b = bwr(g, gap.end, gap.start_time, gap.end_deadline, cfg.prune, &f, gap.start,
                     allowed_ptr());
        visited_here += f.visited_forward_count + b.visited_backward_count;
        auto inter = intersect(g, f, b);
        for (int v : inter.ea.ids()) next_allowed[static_cast<std::size_t>(v)] = 1;
        if (!inter.ea.contains(gap.end)) continue;  // stitch will fail here; rollback handles it
        double slack = gap.end_deadline - inter.ea.at(gap.end);
        for (int a = 0; a < static_cast<int>(g.arc_count()); ++a) {
          if (blacklist[static_cast<std::size_t>(a)] || in_chain[static_cast<std::size_t>(a)]) {
            continue;
          }
          auto cand = score_candidate(g, gap, a, inter, slack, cfg);
          if (!cand || !(cand->ratio > 0.0)) continue;
          cand->gap_index = static_cast<int>(gi);
          if (!best || cand->ratio > best->ratio ||
              (cand->ratio == best->ratio && cand->arc < best->arc)) {
            best = cand;
          }
        }
      }
      result.visited_vertex_counts.push_back(visited_here);
      if (cfg.restrict_recursion_graph || result.recursions == 1) {
        allowed = std::move(next_allowed);
      }
    } else {
      result.truncated = true;
    }

    if (best) {
      const Arc& a = g.arc(best->arc);
      Gap parent = gaps[static_cast<std::size_t>(best->gap_index)];
      history.push_back({best->gap_index, parent, best->arc});
      Gap left{parent.start, a.tail, parent.start_time, best->tail_latest_departure};
      Gap right{a.head, parent.end, best->arrival_at_head, parent.end_deadline};
      gaps[static_cast<std::size_t>(best->gap_index)] = left;
      gaps.insert(gaps.begin() + best->gap_index + 1, right);
      inserted.insert(inserted.begin() + best->gap_index, best->arc);
      in_chain[static_cast<std::size_t>(best->arc)] = 1;
      continue;
    }

    auto st = stitch(g, gaps, inserted, q.t0);
    if (st.complete && !st.duplicate_arcs) {
      result.path = std::move(st.path);
      result.travel_time = result.path.arrivals.back() - q.t0;
      result.value = path_value(g, result.path);
      result.wall_time = elapsed();
      return result;
    }
    if (history.empty()) return std::nullopt;  // not even the bare fastest path fits
    const auto& h = history.back();
    gaps[static_cast<std::size_t>(h.gap_index)] = h.parent;
    gaps.erase(gaps.begin() + h.gap_index + 1);
    inserted.erase(inserted.begin() + h.gap_index);
    in_chain[static_cast<std::size_t>(h.arc)] = 0;
    blacklist[static_cast<std::size_t>(h.arc)] = 1;
    history.pop_back();
    ++result.rollbacks;
  }
}

}  // namespace tdaop
