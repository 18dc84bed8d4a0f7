#pragma once

#include "randtherm/common.hpp"
#include "randtherm/model.hpp"
#include "randtherm/partition.hpp"
#include "randtherm/reports.hpp"

namespace randtherm {

// Haar average of tr rho_S(t)^2 for a pure product initial state, as a
// closed form in phi(t) and phi(2t):
//   delta/(1+d) + [4 (d - delta + 1) d^2 / ((d+3)(d^2-1))] *
//     ( |phi_t|^4/4 + |phi_2t|^2/(4 d^2) + Re(phi_t^2 conj(phi_2t))/(2d)
//       - |phi_t|^2/d^2 )
double expected_purity(const SubsystemSplit& split, Complex phi_t, Complex phi_2t);

// E[tr rho_S^2(t)] - 1/dS <= |phi|^4 + 4/dB for separable initial states.
double separable_purity_gap_bound(const SubsystemSplit& split, double phi_abs);

// E|| rho_S(t) - 1/dS ||_tr <= sqrt(dS) sqrt(|phi|^4 + 4/dB).
double separable_distance_bound(const SubsystemSplit& split, double phi_abs);

// |phi(t)| <= e^{-sigma^2 t^2 / 2} for free-mode spectra, with the stated
// window |t| epsilon_max <= 2 pi recorded as a precondition.
BoundReport solvable_gaussian_phi_report(const SolvableSpectrumSpec& spec, double t);

// Derivation record for the solvable-regime constant a0 (= 8):
//   E[Delta(T)] <= sqrt(dS) [ (1/T) int |phi|^2 + 2/sqrt(dB) ]   (distance bound)
//   (u + v)^2 <= 2 u^2 + 2 v^2, u^2 <= u for u <= 1,
//   (1/T) int_0^T |phi|^2 <= (1/(T sigma)) int_0^inf e^{-u^2} du = sqrt(pi)/(2 T sigma)
//   => E[Delta(T)]^2 <= dS ( sqrt(pi)/(T sigma) + 8/dB ) <= a0 dS (1/(T sigma) + 1/dB).
// The Gaussian step needs |t| epsilon_max <= pi on [0, T]; the forecast's
// T epsilon_max = N^(eps - 1/2) <= 1 always satisfies it.
DerivationLog solvable_a0_derivation();
double solvable_a0();

// T = N^(eps-1/2) / epsilon_max and
// E[Delta(T)]^2 <= a0 dS ( epsilon_max / (N^eps sigma_bar) + 1/dB ).
ThermalizationForecast solvable_timescale_bound(const SolvableSpectrumSpec& spec,
                                                const SubsystemSplit& split,
                                                double epsilon_exponent);

struct LatticePhiBound {
  double T = 0.0;
  double phi_average_bound = 0.0;  // bound on (1/T) int_0^T |phi|
  BoundReport report;
};

// T = a0 sigma_bar^2 N^(1/(5D) - 1/2) with the lattice constants of
// lemma_constants; bound b0 (1 + sigma_bar^-3) / N^(1/(5D)). Requires the
// large-lattice condition.
LatticePhiBound local_phi_time_average_bound(const LatticeSpec& lattice, double sigma_bar2,
                                             double h);

// Full forecast for spectra of local Hamiltonians:
//   E[Delta(T)]^2 <= b0 dS ( (1 + sigma_bar^-3)/N^(1/(5D)) + 1/dB ),
// with probability floor 1 - N^((eps - 1/(5D))/4), distance threshold
// N^((eps - 1/(5D))/4) and fraction floor
//   1 - sqrt( b0 dS ( (1 + sigma_bar^-3)/N^eps + N^(1/(5D))/(N^eps dB) ) ).
ThermalizationForecast local_thermalization_forecast(const LatticeSpec& lattice,
                                                     const SubsystemSplit& split,
                                                     double sigma_bar2, double h,
                                                     double epsilon);

}  // namespace randtherm
