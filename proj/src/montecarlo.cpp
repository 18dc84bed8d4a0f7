#include "randtherm/montecarlo.hpp"

#include <algorithm>
#include <cmath>

namespace randtherm {

namespace {

void check_capacity(long long d) {
  if (d > kMaxMonteCarloDim)
    throw CapacityError("monte carlo limited to dimension " +
                        std::to_string(kMaxMonteCarloDim));
}

VectorXcd full_product_vector(const PureProduct& p) {
  VectorXcd psi(p.psiS.size() * p.psiB.size());
  for (Eigen::Index i = 0; i < p.psiS.size(); ++i)
    psi.segment(i * p.psiB.size(), p.psiB.size()) = p.psiS(i) * p.psiB;
  return psi;
}

// Trace distance of a reduced state to the maximally mixed state, from the
// raw dS x dS matrix.
double distance_to_mixed(const MatrixXcd& rho_s) {
  const long long dS = rho_s.rows();
  MatrixXcd diff = rho_s - MatrixXcd::Identity(dS, dS) / static_cast<double>(dS);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

long long chunk_size_for(long long d) {
  const long long budget = 1LL << 22;  // ~64 MB of complex doubles per chunk matrix
  return std::max<long long>(1, std::min<long long>(512, budget / std::max<long long>(1, d)));
}

// Runs fn(sample_index, rho_s_at_time_k) for every sample and grid time.
template <typename PerTime>
void for_each_reduced(const SpectrumTable& spectrum, const SubsystemSplit& split,
                      const InitialState& rho0, const std::vector<double>& times,
                      long long n, const SeedStream& seeds, const McOptions& opt,
                      PerTime per_time) {
  spectrum.validate();
  const long long d = spectrum.dim();
  check_capacity(d);
  if (d != split.d()) throw std::domain_error("estimator: split does not match spectrum");

  if (std::holds_alternative<PureProduct>(rho0)) {
    const VectorXcd psi0 = full_product_vector(std::get<PureProduct>(rho0));
    if (psi0.size() != d) throw std::domain_error("estimator: initial state dimension");
    const long long chunk = chunk_size_for(d);
    parallel_for(n, opt.threads, [&](long long i) {
      const MatrixXcd u = sample_haar_unitary(d, seeds.seed_for(i));
      VectorXcd psi_eig = u.adjoint() * psi0;
      const long long nt = static_cast<long long>(times.size());
      MatrixXcd cols(d, std::min(chunk, nt));
      for (long long base = 0; base < nt; base += chunk) {
        const long long k = std::min(chunk, nt - base);
        for (long long j = 0; j < k; ++j) {
          const double t = times[base + j];
          for (long long m = 0; m < d; ++m) {
            const double a = -t * spectrum.energies[m];
            cols(m, j) = Complex(std::cos(a), std::sin(a)) * psi_eig(m);
          }
        }
        MatrixXcd psi_t(d, k);
        psi_t.noalias() = u * cols.leftCols(k);
        for (long long j = 0; j < k; ++j) {
          MatrixXcd rho_s = reduced_from_pure(psi_t.col(j), split.dS, split.dB);
          per_time(i, base + j, rho_s);
        }
      }
    });
    return;
  }

  const DensityMatrix& dm = std::get<DensityMatrix>(rho0);
  if (dm.dim() != d) throw std::domain_error("estimator: initial state dimension");
  parallel_for(n, opt.threads, [&](long long i) {
    DiagonalizedHamiltonian h;
    h.basis = sample_haar_unitary(d, seeds.seed_for(i));
    h.energies = spectrum;
    QuenchCache cache(h, dm);
    for (size_t j = 0; j < times.size(); ++j) {
      DensityMatrix rho_t = cache.state_at(times[j]);
      DensityMatrix rho_s = partial_trace_B(rho_t, split);
      per_time(i, static_cast<long long>(j), rho_s.matrix());
    }
  });
}

}  // namespace

EstimatorResult EstimatorResult::reduce(const std::vector<double>& samples) {
  EstimatorResult r;
  r.n_samples = static_cast<long long>(samples.size());
  r.per_sample = samples;
  if (samples.empty()) return r;
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(samples.size());
  r.mean = mean;
  if (samples.size() >= 2) {
    double ss = 0.0;
    for (double v : samples) ss += sqr(v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));
    r.std_error = sd / std::sqrt(static_cast<double>(samples.size()));
  }
  return r;
}

EstimatorResult estimate_purity(const SpectrumTable& spectrum, const SubsystemSplit& split,
                                const InitialState& rho0, double t, long long n,
                                const SeedStream& seeds, const McOptions& opt) {
  if (n < 1) throw std::domain_error("estimator: n must be >= 1");
  std::vector<double> vals(n, 0.0);
  for_each_reduced(spectrum, split, rho0, {t}, n, seeds, opt,
                   [&](long long i, long long, const MatrixXcd& rho_s) {
                     vals[i] = purity_raw(rho_s);
                   });
  return EstimatorResult::reduce(vals);
}

EstimatorResult estimate_trace_distance(const SpectrumTable& spectrum,
                                        const SubsystemSplit& split, const InitialState& rho0,
                                        double t, long long n, const SeedStream& seeds,
                                        const McOptions& opt) {
  if (n < 1) throw std::domain_error("estimator: n must be >= 1");
  std::vector<double> vals(n, 0.0);
  for_each_reduced(spectrum, split, rho0, {t}, n, seeds, opt,
                   [&](long long i, long long, const MatrixXcd& rho_s) {
                     vals[i] = distance_to_mixed(rho_s);
                   });
  return EstimatorResult::reduce(vals);
}

EstimatorResult estimate_delta(const SpectrumTable& spectrum, const SubsystemSplit& split,
                               const InitialState& rho0, double T, const TimeGrid& grid,
                               long long n, const SeedStream& seeds, const McOptions& opt) {
  if (n < 1) throw std::domain_error("estimator: n must be >= 1");
  if (!(T > 0.0)) throw std::domain_error("estimator: T must be > 0");
  const std::vector<double> times = grid.times();
  std::vector<std::vector<double>> traj(n, std::vector<double>(times.size(), 0.0));
  for_each_reduced(spectrum, split, rho0, times, n, seeds, opt,
                   [&](long long i, long long j, const MatrixXcd& rho_s) {
                     traj[i][j] = distance_to_mixed(rho_s);
                   });
  std::vector<double> vals(n, 0.0);
  for (long long i = 0; i < n; ++i) vals[i] = time_average_samples(traj[i], T);
  return EstimatorResult::reduce(vals);
}

BoundReport markov_empirical_check(const std::vector<double>& delta_samples, double c,
                                   double y) {
  if (delta_samples.empty()) throw std::domain_error("markov check: no samples");
  if (!(y > 0.0)) throw std::domain_error("markov check: y must be > 0");
  const EstimatorResult est = EstimatorResult::reduce(delta_samples);
  BoundReport r;
  r.name = "markov_empirical";
  r.param = y;
  r.preconditions.push_back({"empirical mean <= c", est.mean <= c});
  const double nn = static_cast<double>(delta_samples.size());
  long long hits = 0;
  for (double v : delta_samples)
    if (v <= y * c) ++hits;
  const double freq = static_cast<double>(hits) / nn;
  const double se = std::sqrt(std::max(freq * (1.0 - freq), 0.0) / nn);
  r.lhs = 1.0 - 1.0 / y;   // theoretical floor
  r.rhs = freq + 3.0 * se; // observed frequency with binomial slack
  r.tolerance = 0.0;
  return r;
}

}  // namespace randtherm
