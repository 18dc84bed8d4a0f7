#pragma once

#include <functional>
#include <vector>

#include "randtherm/common.hpp"

namespace randtherm {

// Uniform grid on [0, t_max] including both endpoints.
struct TimeGrid {
  double t_max = 0.0;
  long long n_intervals = 1;

  // Default resolution rule: step = min(T / cap, pi / (10 * spectral_width)),
  // so the fastest phase e^{i t (E_max - E_min)} is sampled >= 20 times per
  // period. spectral_width = 0 falls back to T / cap.
  static TimeGrid resolve(double t_max, double spectral_width, long long cap = 2000);

  double step() const { return t_max / static_cast<double>(n_intervals); }
  std::vector<double> times() const;
};

// Trapezoidal (1/T) * integral_0^T f(t) dt on a uniform grid.
double time_average(const std::function<double(double)>& f, double t_max,
                    long long n_intervals);

// Same rule applied to precomputed values on a uniform grid (values.size()
// = n_intervals + 1).
double time_average_samples(const std::vector<double>& values, double t_max);

// Adaptive Simpson integral of f on [a, b] to absolute tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

}  // namespace randtherm
