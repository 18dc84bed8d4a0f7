#include "randtherm/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace randtherm {

namespace {

VectorXcd phase_column(const std::vector<double>& energies, double t) {
  const long long d = static_cast<long long>(energies.size());
  VectorXcd ph(d);
  for (long long k = 0; k < d; ++k) {
    const double a = -t * energies[k];
    ph(k) = Complex(std::cos(a), std::sin(a));
  }
  return ph;
}

// Row-major offset of each sub-index of `sites` inside the full space.
std::vector<long long> offsets_for_sites(const std::vector<long long>& site_dims,
                                         const std::vector<int>& sites) {
  std::vector<long long> strides(site_dims.size());
  long long acc = 1;
  for (int k = static_cast<int>(site_dims.size()) - 1; k >= 0; --k) {
    strides[k] = acc;
    acc *= site_dims[k];
  }
  long long sub_dim = 1;
  for (int s : sites) sub_dim *= site_dims[s];
  std::vector<long long> offsets(sub_dim, 0);
  long long repeat = sub_dim;
  for (int s : sites) {
    const long long ds = site_dims[s];
    repeat /= ds;
    for (long long i = 0; i < sub_dim; ++i) offsets[i] += ((i / repeat) % ds) * strides[s];
  }
  return offsets;
}

}  // namespace

DensityMatrix evolve(const DiagonalizedHamiltonian& h, const DensityMatrix& rho0, double t) {
  if (h.dim() != rho0.dim()) throw std::domain_error("evolve: dimension mismatch");
  QuenchCache cache(h, rho0);
  return cache.state_at(t);
}

QuenchCache::QuenchCache(const DiagonalizedHamiltonian& h, const DensityMatrix& rho0)
    : h_(h) {
  if (h.dim() != rho0.dim()) throw std::domain_error("quench: dimension mismatch");
  rho_eig_.noalias() = h_.basis.adjoint() * rho0.matrix() * h_.basis;
}

DensityMatrix QuenchCache::state_at(double t) const {
  const long long d = h_.dim();
  VectorXcd ph = phase_column(h_.energies.energies, t);
  MatrixXcd m(d, d);
  for (long long j = 0; j < d; ++j)
    for (long long i = 0; i < d; ++i) m(i, j) = ph(i) * rho_eig_(i, j) * std::conj(ph(j));
  MatrixXcd out = h_.basis * m * h_.basis.adjoint();
  out = 0.5 * (out + out.adjoint().eval());  // remove rounding-level drift
  return DensityMatrix::unchecked(std::move(out));
}

PureQuenchCache::PureQuenchCache(const DiagonalizedHamiltonian& h, const VectorXcd& psi0)
    : h_(h) {
  if (h.dim() != psi0.size()) throw std::domain_error("quench: dimension mismatch");
  psi_eig_.noalias() = h_.basis.adjoint() * psi0;
}

VectorXcd PureQuenchCache::state_at(double t) const {
  VectorXcd ph = phase_column(h_.energies.energies, t);
  return h_.basis * ph.cwiseProduct(psi_eig_);
}

MatrixXcd PureQuenchCache::states_at(const std::vector<double>& times) const {
  const long long d = h_.dim();
  const long long k = static_cast<long long>(times.size());
  MatrixXcd cols(d, k);
  for (long long j = 0; j < k; ++j)
    cols.col(j) = phase_column(h_.energies.energies, times[j]).cwiseProduct(psi_eig_);
  return h_.basis * cols;
}

MatrixXcd reduced_from_pure(const VectorXcd& psi, long long dS, long long dB) {
  if (psi.size() != dS * dB) throw std::domain_error("reduce: dimension mismatch");
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(psi.data(), dS, dB);
  MatrixXcd rho(dS, dS);
  rho.noalias() = m * m.adjoint();
  return rho;
}

DensityMatrix partial_trace_B(const DensityMatrix& rho, const SubsystemSplit& split) {
  if (rho.dim() != split.d()) throw std::domain_error("partial trace: split mismatch");
  const int n = static_cast<int>(split.site_dims.size());
  std::vector<int> b_sites;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(split.s_sites.begin(), split.s_sites.end(), k))
      b_sites.push_back(k);
  const std::vector<long long> sOff = offsets_for_sites(split.site_dims, split.s_sites);
  const std::vector<long long> bOff = offsets_for_sites(split.site_dims, b_sites);
  const MatrixXcd& m = rho.matrix();
  MatrixXcd out = MatrixXcd::Zero(split.dS, split.dS);
  for (long long s = 0; s < split.dS; ++s)
    for (long long sp = 0; sp < split.dS; ++sp) {
      Complex acc = 0.0;
      for (long long b = 0; b < split.dB; ++b) acc += m(sOff[s] + bOff[b], sOff[sp] + bOff[b]);
      out(s, sp) = acc;
    }
  return DensityMatrix::unchecked(std::move(out));
}

double trace_distance_raw(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::domain_error("trace distance: dimension mismatch");
  MatrixXcd diff = a - b;
  // Canonical sign so that d(a,b) and d(b,a) run on the identical matrix.
  for (long long j = 0; j < diff.cols(); ++j) {
    bool decided = false;
    for (long long i = 0; i < diff.rows() && !decided; ++i) {
      const Complex v = diff(i, j);
      if (v != Complex(0.0, 0.0)) {
        if (v.real() < 0.0 || (v.real() == 0.0 && v.imag() < 0.0)) diff = -diff;
        decided = true;
      }
    }
    if (decided) break;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance_raw(a.matrix(), b.matrix());
}

double purity_raw(const MatrixXcd& rho) { return rho.squaredNorm(); }

double purity(const DensityMatrix& rho) { return purity_raw(rho.matrix()); }

void Trajectory::validate() const {
  if (times.empty() || times.size() != values.size())
    throw std::invalid_argument("trajectory: empty or mismatched");
  if (times.front() != 0.0) throw std::invalid_argument("trajectory: must start at t = 0");
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("trajectory: times not strictly increasing");
}

double time_average(const Trajectory& traj) {
  traj.validate();
  if (traj.times.size() < 2) throw std::domain_error("time average: need >= 2 points");
  return time_average_samples(traj.values, traj.times.back());
}

double fraction_below(const Trajectory& traj, double threshold) {
  traj.validate();
  long long count = 0;
  for (double v : traj.values)
    if (v <= threshold) ++count;
  return static_cast<double>(count) / static_cast<double>(traj.values.size());
}

}  // namespace randtherm
