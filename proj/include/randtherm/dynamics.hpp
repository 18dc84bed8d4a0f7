#pragma once

#include <vector>

#include "randtherm/common.hpp"
#include "randtherm/haar.hpp"
#include "randtherm/model.hpp"
#include "randtherm/quadrature.hpp"

namespace randtherm {

// rho(t) = e^{-itH} rho0 e^{itH}, computed in the stored eigenbasis.
DensityMatrix evolve(const DiagonalizedHamiltonian& h, const DensityMatrix& rho0, double t);

// Caches U^dagger rho0 U so many times t of one quench cost one basis change
// each instead of two.
class QuenchCache {
 public:
  QuenchCache(const DiagonalizedHamiltonian& h, const DensityMatrix& rho0);

  DensityMatrix state_at(double t) const;

 private:
  const DiagonalizedHamiltonian& h_;
  MatrixXcd rho_eig_;  // U^dagger rho0 U
};

// Pure-state variant: evolves |psi> and exposes the reduced density matrix
// on the leading-factor subsystem. states_at batches the basis change into
// one matrix product per time chunk.
class PureQuenchCache {
 public:
  PureQuenchCache(const DiagonalizedHamiltonian& h, const VectorXcd& psi0);

  VectorXcd state_at(double t) const;
  // Columns are |psi(t_k)> for the given times.
  MatrixXcd states_at(const std::vector<double>& times) const;

 private:
  const DiagonalizedHamiltonian& h_;
  VectorXcd psi_eig_;  // U^dagger psi0
};

// Reduced state on S for a pure |psi> under the leading-factor split.
MatrixXcd reduced_from_pure(const VectorXcd& psi, long long dS, long long dB);

// tr_B rho for an arbitrary factor assignment.
DensityMatrix partial_trace_B(const DensityMatrix& rho, const SubsystemSplit& split);

// Sum of singular values of (a - b); range [0, 2]. No factor 1/2.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance_raw(const MatrixXcd& a, const MatrixXcd& b);

// tr rho^2, in [1/d, 1].
double purity(const DensityMatrix& rho);
double purity_raw(const MatrixXcd& rho);

// Scalar observable sampled on a uniform time grid starting at 0.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;

  void validate() const;
};

double time_average(const Trajectory& traj);

// Fraction of grid times with value <= threshold (grid-measure approximation
// of the time fraction).
double fraction_below(const Trajectory& traj, double threshold);

}  // namespace randtherm
