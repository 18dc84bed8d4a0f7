#include "randtherm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace randtherm {

TimeGrid TimeGrid::resolve(double t_max, double spectral_width, long long cap) {
  if (!(t_max > 0.0)) throw std::domain_error("time grid: t_max must be positive");
  if (cap < 1) throw std::domain_error("time grid: cap must be >= 1");
  double step = t_max / static_cast<double>(cap);
  if (spectral_width > 0.0) step = std::min(step, M_PI / (10.0 * spectral_width));
  TimeGrid g;
  g.t_max = t_max;
  g.n_intervals = std::max<long long>(1, static_cast<long long>(std::ceil(t_max / step)));
  return g;
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> ts(n_intervals + 1);
  const double h = step();
  for (long long i = 0; i <= n_intervals; ++i) ts[i] = h * static_cast<double>(i);
  ts.back() = t_max;
  return ts;
}

double time_average(const std::function<double(double)>& f, double t_max,
                    long long n_intervals) {
  if (!(t_max > 0.0)) throw std::domain_error("time average: T must be positive");
  if (n_intervals < 1) throw std::domain_error("time average: need >= 1 interval");
  const double h = t_max / static_cast<double>(n_intervals);
  double acc = 0.5 * (f(0.0) + f(t_max));
  for (long long i = 1; i < n_intervals; ++i) acc += f(h * static_cast<double>(i));
  return acc * h / t_max;
}

double time_average_samples(const std::vector<double>& values, double t_max) {
  if (!(t_max > 0.0)) throw std::domain_error("time average: T must be positive");
  if (values.size() < 2) throw std::domain_error("time average: need >= 2 samples");
  double acc = 0.5 * (values.front() + values.back());
  for (size_t i = 1; i + 1 < values.size(); ++i) acc += values[i];
  const long long n = static_cast<long long>(values.size()) - 1;
  return acc / static_cast<double>(n);
}

namespace {
double simpson(double fa, double fm, double fb, double h6) {
  return h6 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, (m - a) / 6.0);
  const double right = simpson(fm, frm, fb, (b - m) / 6.0);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, (b - a) / 6.0);
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace randtherm
