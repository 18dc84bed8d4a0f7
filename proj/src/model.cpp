#include "randtherm/model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace randtherm {

double operator_norm_hermitian(const MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double hermiticity_defect(const MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void parallel_for(long long n, int threads, const std::function<void(long long)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  auto worker = [&] {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int k = static_cast<int>(std::min<long long>(threads, n));
  pool.reserve(k);
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

double SpectrumTable::min_energy() const {
  return *std::min_element(energies.begin(), energies.end());
}

double SpectrumTable::max_energy() const {
  return *std::max_element(energies.begin(), energies.end());
}

void SpectrumTable::validate() const {
  if (energies.empty()) throw std::invalid_argument("spectrum: no energies");
  for (double e : energies)
    if (!std::isfinite(e)) throw std::invalid_argument("spectrum: non-finite energy");
}

double SolvableSpectrumSpec::epsilon_max() const {
  double m = 0.0;
  for (double e : epsilons) m = std::max(m, std::abs(e));
  return m;
}

double SolvableSpectrumSpec::sigma2() const {
  double s = 0.0;
  for (double e : epsilons) s += e * e;
  return 0.25 * s;
}

double SolvableSpectrumSpec::sigma_bar2() const {
  if (epsilons.empty()) throw std::domain_error("solvable spec: empty");
  return sigma2() / static_cast<double>(epsilons.size());
}

double SolvableSpectrumSpec::mean_energy() const {
  double s = 0.0;
  for (double e : epsilons) s += e;
  return 0.5 * s;
}

SpectrumTable spectrum_from_solvable(const SolvableSpectrumSpec& spec) {
  const int n = spec.n_sites();
  if (n < 1) throw std::invalid_argument("solvable spec: need at least one coupling");
  if (n > kMaxSolvableSites)
    throw CapacityError("solvable spec: N > " + std::to_string(kMaxSolvableSites));
  for (double e : spec.epsilons)
    if (!std::isfinite(e)) throw std::invalid_argument("solvable spec: non-finite coupling");

  SpectrumTable out;
  out.provenance = SpectrumProvenance::Solvable;
  out.n_sites = n;
  const long long d = 1LL << n;
  out.energies.resize(d);
  for (long long idx = 0; idx < d; ++idx) {
    double e = 0.0;
    // bit (n-1-k) of idx holds n_{k+1}; n_1 is the most significant digit
    for (int k = 0; k < n; ++k)
      if ((idx >> (n - 1 - k)) & 1) e += spec.epsilons[k];
    out.energies[idx] = e;
  }
  return out;
}

SubsystemSplit SubsystemSplit::leading(long long dS, long long dB) {
  return of_sites({dS, dB}, {0});
}

SubsystemSplit SubsystemSplit::of_sites(std::vector<long long> site_dims,
                                        std::vector<int> s_sites) {
  if (site_dims.empty()) throw std::invalid_argument("split: no factors");
  for (long long d : site_dims)
    if (d < 1) throw std::invalid_argument("split: factor dimension < 1");
  std::sort(s_sites.begin(), s_sites.end());
  SubsystemSplit sp;
  sp.site_dims = std::move(site_dims);
  sp.s_sites = std::move(s_sites);
  const int n = static_cast<int>(sp.site_dims.size());
  for (int s : sp.s_sites)
    if (s < 0 || s >= n) throw std::invalid_argument("split: S factor out of range");
  sp.dS = 1;
  sp.dB = 1;
  int si = 0;
  for (int k = 0; k < n; ++k) {
    bool in_s = si < static_cast<int>(sp.s_sites.size()) && sp.s_sites[si] == k;
    if (in_s) {
      sp.dS *= sp.site_dims[k];
      ++si;
    } else {
      sp.dB *= sp.site_dims[k];
    }
  }
  if (sp.dS < 1 || sp.dB < 1) throw std::invalid_argument("split: bad dimensions");
  return sp;
}

DensityMatrix DensityMatrix::checked(MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("density matrix: not square");
  if (hermiticity_defect(m) > kHermitianTol)
    throw std::invalid_argument("density matrix: not Hermitian within 1e-10");
  if (std::abs(m.trace().real() - 1.0) > kTraceTol || std::abs(m.trace().imag()) > kTraceTol)
    throw std::invalid_argument("density matrix: trace != 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigenvalueFloor)
    throw std::invalid_argument("density matrix: negative eigenvalue beyond 1e-10");
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::unchecked(MatrixXcd m) { return DensityMatrix(std::move(m)); }

DensityMatrix DensityMatrix::maximally_mixed(long long d) {
  if (d < 1) throw std::domain_error("maximally mixed: d < 1");
  MatrixXcd m = MatrixXcd::Identity(d, d) / static_cast<double>(d);
  return DensityMatrix(std::move(m));
}

DensityMatrix pure_product_state(const VectorXcd& psiS, const VectorXcd& psiB) {
  if (psiS.size() == 0 || psiB.size() == 0)
    throw std::invalid_argument("pure product: empty factor");
  if (std::abs(psiS.norm() - 1.0) > kUnitNormTol || std::abs(psiB.norm() - 1.0) > kUnitNormTol)
    throw std::invalid_argument("pure product: factor not unit norm within 1e-10");
  VectorXcd psi(psiS.size() * psiB.size());
  for (Eigen::Index i = 0; i < psiS.size(); ++i)
    psi.segment(i * psiB.size(), psiB.size()) = psiS(i) * psiB;
  MatrixXcd rho = psi * psi.adjoint();
  return DensityMatrix::checked(std::move(rho));
}

DensityMatrix separable_mixture(const std::vector<SeparableComponent>& components) {
  if (components.empty()) throw std::invalid_argument("separable mixture: no components");
  double wsum = 0.0;
  for (const auto& c : components) {
    if (c.weight < 0.0) throw std::invalid_argument("separable mixture: negative weight");
    wsum += c.weight;
  }
  if (std::abs(wsum - 1.0) > kTraceTol)
    throw std::invalid_argument("separable mixture: weights do not sum to 1 within 1e-10");
  const long long dS = components.front().rhoS.dim();
  const long long dB = components.front().rhoB.dim();
  MatrixXcd acc = MatrixXcd::Zero(dS * dB, dS * dB);
  for (const auto& c : components) {
    if (c.rhoS.dim() != dS || c.rhoB.dim() != dB)
      throw std::invalid_argument("separable mixture: component dimension mismatch");
    acc += c.weight * kron(c.rhoS.matrix(), c.rhoB.matrix());
  }
  return DensityMatrix::checked(std::move(acc));
}

long long LatticeSpec::n_sites() const {
  long long n = 1;
  for (int k = 0; k < D; ++k) n *= M;
  return n;
}

bool LatticeSpec::theorem1_applicable() const {
  // 4^(3/2) R <= M^(3/5)  <=>  (8R)^5 <= M^3
  unsigned __int128 lhs = 1;
  for (int k = 0; k < 5; ++k) lhs *= static_cast<unsigned __int128>(8 * R);
  unsigned __int128 rhs = static_cast<unsigned __int128>(M);
  rhs = rhs * M * M;
  return lhs <= rhs;
}

std::vector<long long> LatticeSpec::coords(long long site) const {
  std::vector<long long> c(D);
  for (int k = D - 1; k >= 0; --k) {
    c[k] = site % M + 1;
    site /= M;
  }
  return c;
}

long long LatticeSpec::site_index(const std::vector<long long>& c) const {
  if (static_cast<int>(c.size()) != D) throw std::invalid_argument("lattice: bad coordinate");
  long long idx = 0;
  for (int k = 0; k < D; ++k) {
    if (c[k] < 1 || c[k] > M) throw std::invalid_argument("lattice: coordinate out of range");
    idx = idx * M + (c[k] - 1);
  }
  return idx;
}

long long LatticeSpec::dist(long long i, long long j) const {
  auto a = coords(i);
  auto b = coords(j);
  long long d = 0;
  for (int k = 0; k < D; ++k) d += std::abs(a[k] - b[k]);
  return d;
}

void LatticeSpec::validate() const {
  if (D < 1) throw std::invalid_argument("lattice: D < 1");
  if (M < 1) throw std::invalid_argument("lattice: M < 1");
  if (R < 1) throw std::invalid_argument("lattice: R < 1");
}

long long LocalHamiltonianSpec::total_dim() const {
  long long d = 1;
  for (long long s : site_dims) {
    d *= s;
    if (d > (1LL << 62) / 4) throw CapacityError("local hamiltonian: dimension overflow");
  }
  return d;
}

void LocalHamiltonianSpec::validate() const {
  lattice.validate();
  if (static_cast<long long>(site_dims.size()) != lattice.n_sites())
    throw std::invalid_argument("local hamiltonian: site_dims length != M^D");
  for (long long s : site_dims)
    if (s < 1) throw std::invalid_argument("local hamiltonian: site dimension < 1");
  for (const auto& t : terms) {
    if (t.support.empty()) throw std::invalid_argument("local term: empty support");
    if (!std::is_sorted(t.support.begin(), t.support.end()))
      throw std::invalid_argument("local term: support not sorted");
    long long dim = 1;
    for (long long s : t.support) {
      if (s < 0 || s >= lattice.n_sites())
        throw std::invalid_argument("local term: support site out of range");
      if (lattice.dist(t.anchor, s) > lattice.R)
        throw std::invalid_argument("local term: support outside radius-R ball of anchor");
      dim *= site_dims[s];
    }
    if (t.matrix.rows() != dim || t.matrix.cols() != dim)
      throw std::invalid_argument("local term: matrix dimension != product of support dims");
    if (hermiticity_defect(t.matrix) > kHermitianTol)
      throw std::invalid_argument("local term: not Hermitian within 1e-10");
    if (operator_norm_hermitian(t.matrix) > h + kHermitianTol)
      throw std::invalid_argument("local term: operator norm exceeds h within 1e-10");
  }
}

LocalHamiltonianSpec LocalHamiltonianSpec::centered() const {
  LocalHamiltonianSpec out = *this;
  for (auto& t : out.terms) {
    Complex mean = t.matrix.trace() / static_cast<double>(t.matrix.rows());
    t.matrix -= mean * MatrixXcd::Identity(t.matrix.rows(), t.matrix.cols());
  }
  out.h = out.max_term_norm();
  return out;
}

double LocalHamiltonianSpec::max_term_norm() const {
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, operator_norm_hermitian(t.matrix));
  return m;
}

}  // namespace randtherm
