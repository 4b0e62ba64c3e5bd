#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tdaop/path.hpp"

namespace tdaop {

// Linear model in CPLEX-LP shape: one objective, named rows, variable
// bounds, binaries.
struct LpRow {
  std::string name;
  std::map<std::string, double> terms;
  char sense = '<';  // '<', '>', '='; inequalities are non-strict
  double rhs = 0.0;
};

struct LpBound {
  std::string var;
  double lo = 0.0;
  double hi = 0.0;
};

struct LpModel {
  std::string comment;
  std::map<std::string, double> objective;  // maximized
  std::vector<LpRow> rows;
  std::vector<LpBound> bounds;
  std::vector<std::string> binaries;
};

// Time grid shared by all arc profiles of a model: the finest step width,
// with every profile step an integer multiple of it. Window k0 contains the
// departure time; windows above k_last start past the arrival deadline.
struct MipGrid {
  double step = 0.0;
  long long k0 = 0;
  long long k_last = 0;
  double end = 0.0;  // (k_last + 1) * step, upper bound for entry times

  long long index_of(double t) const;
  double start_of(long long k) const { return static_cast<double>(k) * step; }
};

struct MipConfig {
  std::size_t max_binaries = 100000;
};

MipGrid make_mip_grid(const TDGraph& g, const Query& q);

// Builds the arc-window model: binary p_<i>_<j>_<k> (arc (i,j) entered in
// grid window k) and continuous t_<i>_<j>_<k> (that entry time). Rows cover
// the value objective, the budget, per-vertex degree caps and flow
// conservation, source/destination incidence, time propagation with gated
// travel-time products, per-window entry bounds, and departure fixing.
LpModel export_mip(const TDGraph& g, const Query& q, const MipConfig& cfg = {});

void write_lp(const LpModel& m, std::ostream& out);
std::string to_lp_string(const LpModel& m);
LpModel parse_lp(const std::string& text);

// Bit-exact structural comparison (coefficients, senses, rhs, bounds,
// binaries).
bool models_equal(const LpModel& a, const LpModel& b);

struct SubstitutionReport {
  bool ok = true;
  std::string violation;
  double objective_value = 0.0;
};

// Derives the assignment a timed path induces (entry-window binaries and
// entry times) and checks it against every row and bound of the model.
SubstitutionReport substitute_path(const LpModel& m, const MipGrid& grid, const TDGraph& g,
                                   const TimedPath& path);

}  // namespace tdaop
