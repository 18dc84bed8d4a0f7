#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace randtherm {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Structural tolerances shared by all matrix validity checks.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kUnitNormTol = 1e-10;

// Dense diagonalization / Monte Carlo size limits.
inline constexpr long long kMaxDenseDim = 1LL << 14;
inline constexpr long long kMaxMonteCarloDim = 4096;
inline constexpr long long kMaxContractionDim = 1LL << 16;
inline constexpr int kMaxSolvableSites = 24;

// Thrown when a request exceeds the dense/enumeration limits above.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown on malformed input files or config values.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double sqr(double x) { return x * x; }

// Largest singular value of a Hermitian matrix.
double operator_norm_hermitian(const MatrixXcd& m);

// Max absolute entry of (m - m^dagger).
double hermiticity_defect(const MatrixXcd& m);

// Kronecker product, row-major factor ordering (a is the slow index).
MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b);

// Runs fn(i) for i in [0, n). Results must be written to disjoint slots so
// the outcome is independent of the number of workers.
void parallel_for(long long n, int threads, const std::function<void(long long)>& fn);

}  // namespace randtherm
