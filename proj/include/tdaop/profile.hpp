#pragma once

#include <cstddef>
#include <vector>

namespace tdaop {

// Piecewise-constant function of time with equal step width. Window k covers
// [k*step, (k+1)*step); evaluation beyond the horizon clamps to the last
// window, so the function is total on [0, inf).
class StepProfile {
public:
  StepProfile(double step_width, std::vector<double> values);

  double step_width() const { return step_; }
  std::size_t window_count() const { return values_.size(); }
  double horizon() const { return step_ * static_cast<double>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  // Value of the window containing t. Throws std::domain_error for t < 0.
  double operator()(double t) const { return values_[window_index(t)]; }

  // Clamped window index of t: min(floor(t / step), window_count - 1).
  std::size_t window_index(double t) const;

  double window_start(std::size_t k) const { return step_ * static_cast<double>(k); }

  double min_value() const;
  double max_value() const;
  double mean_value() const;
  bool is_constant() const;

  // Single-window profile holding the unweighted mean of all windows.
  StepProfile averaged() const;

  bool operator==(const StepProfile&) const = default;

private:
  double step_;
  std::vector<double> values_;
};

// Spec-level evaluation entry point.
inline double profile_eval(const StepProfile& p, double t) { return p(t); }

// floor(t / step) with correction for division rounding, so that
// step * k <= t < step * (k + 1) holds exactly in double arithmetic.
long long floor_window(double t, double step);

}  // namespace tdaop
