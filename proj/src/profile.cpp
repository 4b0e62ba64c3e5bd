#include "tdaop/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tdaop {

StepProfile::StepProfile(double step_width, std::vector<double> values)
    : step_(step_width), values_(std::move(values)) {
  if (!(step_ > 0.0)) throw std::invalid_argument("profile step width must be > 0");
  if (values_.empty()) throw std::invalid_argument("profile needs at least one window");
  for (double v : values_) {
    if (!(v >= 0.0)) throw std::invalid_argument("profile values must be non-negative");
  }
}

long long floor_window(double t, double step) {
  auto k = static_cast<long long>(std::floor(t / step));
  // t/step can round across a window boundary; nudge until k*step <= t < (k+1)*step.
  while (k > 0 && static_cast<double>(k) * step > t) --k;
  while (static_cast<double>(k + 1) * step <= t) ++k;
  return k;
}

std::size_t StepProfile::window_index(double t) const {
  if (t < 0.0) throw std::domain_error("profile evaluated at negative time");
  long long k = floor_window(t, step_);
  auto last = static_cast<long long>(values_.size()) - 1;
  return static_cast<std::size_t>(std::clamp(k, 0LL, last));
}

double StepProfile::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double StepProfile::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double StepProfile::mean_value() const {
  double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  return sum / static_cast<double>(values_.size());
}

bool StepProfile::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](double v) { return v == values_.front(); });
}

StepProfile StepProfile::averaged() const {
  return StepProfile(step_, {mean_value()});
}

}  // namespace tdaop
