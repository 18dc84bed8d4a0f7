#pragma once

#include <variant>
#include <vector>

#include "randtherm/bounds.hpp"
#include "randtherm/dynamics.hpp"
#include "randtherm/haar.hpp"
#include "randtherm/model.hpp"
#include "randtherm/seeds.hpp"

namespace randtherm {

struct EstimatorResult {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
  long long n_samples = 0;
  std::vector<double> per_sample;  // in sample-index order

  static EstimatorResult reduce(const std::vector<double>& samples);
};

// Initial state for the estimators: pure products run on the fast vector
// path, anything else on the density-matrix path.
struct PureProduct {
  VectorXcd psiS;
  VectorXcd psiB;
};
using InitialState = std::variant<PureProduct, DensityMatrix>;

struct McOptions {
  int threads = 1;
};

// Monte Carlo mean of tr rho_S(t)^2 over Haar draws of the eigenbasis.
EstimatorResult estimate_purity(const SpectrumTable& spectrum, const SubsystemSplit& split,
                                const InitialState& rho0, double t, long long n,
                                const SeedStream& seeds, const McOptions& opt = {});

// Mean of || rho_S(t) - 1/dS ||_tr.
EstimatorResult estimate_trace_distance(const SpectrumTable& spectrum,
                                        const SubsystemSplit& split, const InitialState& rho0,
                                        double t, long long n, const SeedStream& seeds,
                                        const McOptions& opt = {});

// Per-sample time average Delta(T) of the trace distance on a shared uniform
// grid; one Haar draw serves every time point of a trajectory.
EstimatorResult estimate_delta(const SpectrumTable& spectrum, const SubsystemSplit& split,
                               const InitialState& rho0, double T, const TimeGrid& grid,
                               long long n, const SeedStream& seeds,
                               const McOptions& opt = {});

// Empirical check of P[Delta <= y c] >= 1 - 1/y: the observed frequency plus
// a 3-standard-error binomial slack must reach the floor.
BoundReport markov_empirical_check(const std::vector<double>& delta_samples, double c,
                                   double y);

}  // namespace randtherm
