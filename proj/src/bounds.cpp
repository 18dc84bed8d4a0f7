#include "randtherm/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "randtherm/spectral.hpp"

namespace randtherm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double expected_purity(const SubsystemSplit& split, Complex phi_t, Complex phi_2t) {
  const double d = static_cast<double>(split.d());
  const double delta = static_cast<double>(split.delta());
  if (d <= 1.0) throw std::domain_error("expected purity: requires d > 1");
  if (std::abs(phi_t) > 1.0 + 1e-12 || std::abs(phi_2t) > 1.0 + 1e-12)
    throw std::invalid_argument("expected purity: |phi| must be <= 1");
  const double a1 = std::norm(phi_t);   // |phi(t)|^2
  const double a2 = std::norm(phi_2t);  // |phi(2t)|^2
  const double cross = (phi_t * phi_t * std::conj(phi_2t)).real();
  const double bracket =
      a1 * a1 / 4.0 + a2 / (4.0 * d * d) + cross / (2.0 * d) - a1 / (d * d);
  const double coeff = 4.0 * (d - delta + 1.0) * d * d / ((d + 3.0) * (d * d - 1.0));
  return delta / (1.0 + d) + coeff * bracket;
}

double separable_purity_gap_bound(const SubsystemSplit& split, double phi_abs) {
  if (phi_abs < 0.0 || phi_abs > 1.0 + 1e-12)
    throw std::invalid_argument("purity gap bound: |phi| must be in [0, 1]");
  return std::pow(phi_abs, 4) + 4.0 / static_cast<double>(split.dB);
}

double separable_distance_bound(const SubsystemSplit& split, double phi_abs) {
  return std::sqrt(static_cast<double>(split.dS)) *
         std::sqrt(separable_purity_gap_bound(split, phi_abs));
}

BoundReport solvable_gaussian_phi_report(const SolvableSpectrumSpec& spec, double t) {
  BoundReport r;
  r.name = "solvable_phi_gaussian";
  r.param = t;
  r.tolerance = 1e-12;
  r.lhs = phi_solvable_abs(spec, t);
  r.rhs = std::exp(-spec.sigma2() * t * t / 2.0);
  r.preconditions.push_back(
      {"|t| epsilon_max <= 2 pi", std::abs(t) * spec.epsilon_max() <= 2.0 * kPi});
  return r;
}

DerivationLog solvable_a0_derivation() {
  DerivationLog log;
  const double g = 0.5 * std::sqrt(kPi);  // int_0^inf e^{-u^2} du
  log.entries.push_back(
      {"a0_solvable", std::max(2.0 * g, 8.0),
       "max(2 g, 8): E[Delta]^2 <= 2 dS (1/(T sigma)) g + 8 dS/dB via the separable "
       "distance bound, sqrt(a+b) <= sqrt(a)+sqrt(b), (u+v)^2 <= 2u^2+2v^2, u^2 <= u, "
       "and (1/T) int_0^T |phi|^2 <= g/(T sigma) on |t| epsilon_max <= pi",
       {{"gauss_halfline", g}}});
  return log;
}

double solvable_a0() { return solvable_a0_derivation().entries.front().value; }

ThermalizationForecast solvable_timescale_bound(const SolvableSpectrumSpec& spec,
                                                const SubsystemSplit& split,
                                                double epsilon_exponent) {
  if (!(epsilon_exponent > 0.0) || epsilon_exponent > 0.5)
    throw std::domain_error("solvable timescale: exponent must be in (0, 1/2]");
  const double sigma_bar = std::sqrt(spec.sigma_bar2());
  if (!(sigma_bar > 0.0)) throw std::domain_error("solvable timescale: sigma_bar = 0");
  const double emax = spec.epsilon_max();
  const double n = static_cast<double>(spec.n_sites());
  ThermalizationForecast f;
  f.T = std::pow(n, epsilon_exponent - 0.5) / emax;
  f.bound_on_EDelta2 =
      solvable_a0() * static_cast<double>(split.dS) *
      (emax / (std::pow(n, epsilon_exponent) * sigma_bar) + 1.0 / static_cast<double>(split.dB));
  return f;
}

LatticePhiBound local_phi_time_average_bound(const LatticeSpec& lattice, double sigma_bar2,
                                             double h) {
  LatticePhiBound out;
  const LatticeConstants consts = lemma_constants(lattice, h);
  out.report.name = "local_phi_time_average";
  out.report.preconditions.push_back(
      {"4^(3/2) R <= M^(3/5)", lattice.theorem1_applicable()});
  out.report.preconditions.push_back({"sigma_bar > 0", sigma_bar2 > 0.0});
  const double n = static_cast<double>(lattice.n_sites());
  const double dd = static_cast<double>(lattice.D);
  if (out.report.preconditions_hold()) {
    out.T = consts.a0_lattice * sigma_bar2 * std::pow(n, 1.0 / (5.0 * dd) - 0.5);
    const double sb = std::sqrt(sigma_bar2);
    out.phi_average_bound = consts.b0_lattice * (1.0 + 1.0 / (sb * sb * sb)) /
                            std::pow(n, 1.0 / (5.0 * dd));
    out.report.rhs = out.phi_average_bound;
    // lhs stays not-evaluated: exact phi is out of reach at theorem scales.
  }
  return out;
}

ThermalizationForecast local_thermalization_forecast(const LatticeSpec& lattice,
                                                     const SubsystemSplit& split,
                                                     double sigma_bar2, double h,
                                                     double epsilon) {
  if (!lattice.theorem1_applicable())
    throw std::domain_error("local forecast: lattice fails 4^(3/2) R <= M^(3/5)");
  if (!(sigma_bar2 > 0.0)) throw std::domain_error("local forecast: sigma_bar = 0");
  if (!(epsilon > 0.0)) throw std::domain_error("local forecast: epsilon must be > 0");
  const LatticeConstants consts = lemma_constants(lattice, h);
  const double n = static_cast<double>(lattice.n_sites());
  const double dd = static_cast<double>(lattice.D);
  const double inv5d = 1.0 / (5.0 * dd);
  const double sb = std::sqrt(sigma_bar2);
  const double dS = static_cast<double>(split.dS);
  const double dB = static_cast<double>(split.dB);

  ThermalizationForecast f;
  f.T = consts.a0_lattice * sigma_bar2 * std::pow(n, inv5d - 0.5);
  f.bound_on_EDelta2 = consts.b0_forecast * dS *
                       ((1.0 + 1.0 / (sb * sb * sb)) / std::pow(n, inv5d) + 1.0 / dB);
  const double floor_exponent = (epsilon - inv5d) / 4.0;
  const double p_raw = 1.0 - std::pow(n, floor_exponent);
  f.probability_clipped = p_raw <= 0.0 || p_raw > 1.0;  // <= 0 is vacuous
  f.probability_floor = std::clamp(p_raw, 0.0, 1.0);
  f.distance_threshold = std::pow(n, floor_exponent);
  const double frac_raw =
      1.0 - std::sqrt(consts.b0_forecast * dS *
                      ((1.0 + 1.0 / (sb * sb * sb)) / std::pow(n, epsilon) +
                       std::pow(n, inv5d) / (std::pow(n, epsilon) * dB)));
  f.fraction_clipped = frac_raw <= 0.0 || frac_raw > 1.0;
  f.fraction_floor = std::clamp(frac_raw, 0.0, 1.0);
  return f;
}

}  // namespace randtherm
