#include "randtherm/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "randtherm/partition.hpp"
#include "randtherm/quadrature.hpp"
#include "randtherm/spectral.hpp"

namespace randtherm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SpectrumTable random_spectrum(long long d, double width, std::uint64_t seed) {
  if (d < 1) throw std::domain_error("random spectrum: d must be >= 1");
  GaussianRng rng(seed);
  SpectrumTable out;
  out.energies.resize(d);
  for (long long k = 0; k < d; ++k) out.energies[k] = width * rng.uniform();
  return out;
}

LocalHamiltonianSpec random_chain(long long n_sites, long long R, double h,
                                  std::uint64_t seed) {
  if (n_sites < 1) throw std::domain_error("random chain: need at least one site");
  LocalHamiltonianSpec spec;
  spec.lattice = LatticeSpec{1, n_sites, R};
  spec.site_dims.assign(n_sites, 2);
  spec.h = h;
  GaussianRng rng(seed);
  for (long long i = 0; i < n_sites; ++i) {
    LocalTerm term;
    term.anchor = i;
    for (long long s = std::max<long long>(0, i - R);
         s <= std::min<long long>(n_sites - 1, i + R); ++s)
      term.support.push_back(s);
    const long long dim = 1LL << term.support.size();
    MatrixXcd g(dim, dim);
    for (long long r = 0; r < dim; ++r)
      for (long long c = 0; c < dim; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    MatrixXcd m = 0.5 * (g + g.adjoint());
    m -= (m.trace() / static_cast<double>(dim)) * MatrixXcd::Identity(dim, dim);
    const double norm = operator_norm_hermitian(m);
    if (norm > 0.0) m *= h / norm;  // traceless, norm exactly h
    term.matrix = std::move(m);
    spec.terms.push_back(std::move(term));
  }
  spec.validate();
  return spec;
}

InitialState make_initial(const std::string& kind, long long dS, long long dB,
                          std::uint64_t seed) {
  if (kind == "product_basis") {
    VectorXcd s = VectorXcd::Zero(dS);
    VectorXcd b = VectorXcd::Zero(dB);
    s(0) = 1.0;
    b(0) = 1.0;
    return PureProduct{s, b};
  }
  if (kind == "product_haar") {
    const MatrixXcd us = sample_haar_unitary(dS, SeedStream{seed}.seed_for(1));
    const MatrixXcd ub = sample_haar_unitary(dB, SeedStream{seed}.seed_for(2));
    return PureProduct{us.col(0), ub.col(0)};
  }
  if (kind == "maximally_mixed_s") {
    // (1/dS) (x) |0><0|: the reduced state starts exactly maximally mixed
    VectorXcd b0 = VectorXcd::Zero(dB);
    b0(0) = 1.0;
    return separable_mixture({{1.0, DensityMatrix::maximally_mixed(dS),
                               DensityMatrix::checked(b0 * b0.adjoint())}});
  }
  if (kind == "separable_demo") {
    // Mixed separable state: equal mixture of |0><0| (x) |0><0| and
    // |+><+| (x) 1/dB.
    VectorXcd s0 = VectorXcd::Zero(dS);
    s0(0) = 1.0;
    VectorXcd b0 = VectorXcd::Zero(dB);
    b0(0) = 1.0;
    VectorXcd plus = VectorXcd::Constant(dS, 1.0 / std::sqrt(static_cast<double>(dS)));
    std::vector<SeparableComponent> comps;
    comps.push_back({0.5, DensityMatrix::checked(s0 * s0.adjoint()),
                     DensityMatrix::checked(b0 * b0.adjoint())});
    comps.push_back(
        {0.5, DensityMatrix::checked(plus * plus.adjoint()), DensityMatrix::maximally_mixed(dB)});
    return separable_mixture(comps);
  }
  throw ParseError("unknown initial state kind '" + kind + "'");
}

namespace harness {

namespace {

std::vector<double> linspace(double lo, double hi, long long points) {
  std::vector<double> out;
  if (points <= 0) return out;
  if (points == 1) {
    out.push_back(lo);
    return out;
  }
  out.reserve(points);
  for (long long i = 0; i < points; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
  return out;
}

struct SpectrumSource {
  SpectrumTable spectrum;
  std::optional<SolvableSpectrumSpec> solvable;
};

// Spectrum selection shared by phi / quench / montecarlo:
//   spectrum_file=...            explicit energies
//   solvable_epsilons=a,b,c      free-mode couplings
//   random_spectrum_d, random_spectrum_width, random_spectrum_seed
SpectrumSource spectrum_source(const RunConfig& cfg) {
  SpectrumSource src;
  const int given = (cfg.has("spectrum_file") ? 1 : 0) +
                    (cfg.has("solvable_epsilons") ? 1 : 0) +
                    (cfg.has("random_spectrum_d") ? 1 : 0);
  if (given != 1)
    throw ParseError(
        "config: give exactly one of spectrum_file, solvable_epsilons, random_spectrum_d");
  if (cfg.has("spectrum_file")) {
    src.spectrum = load_spectrum(cfg.get_string("spectrum_file")).spectrum;
  } else if (cfg.has("solvable_epsilons")) {
    SolvableSpectrumSpec spec{cfg.get_double_list("solvable_epsilons")};
    src.spectrum = spectrum_from_solvable(spec);
    src.solvable = spec;
  } else {
    src.spectrum = random_spectrum(cfg.get_int("random_spectrum_d"),
                                   cfg.get_double_or("random_spectrum_width", 10.0),
                                   cfg.get_u64_or("random_spectrum_seed", 1));
  }
  return src;
}

const std::vector<std::string> kCommonKeys = {"seed", "threads"};
const std::vector<std::string> kSpectrumKeys = {"spectrum_file", "solvable_epsilons",
                                                "random_spectrum_d", "random_spectrum_width",
                                                "random_spectrum_seed"};

std::vector<std::string> cat(std::initializer_list<std::vector<std::string>> lists) {
  std::vector<std::string> out;
  for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  return out;
}

}  // namespace

RunResult run_phi(const RunConfig& cfg) {
  cfg.require_known_keys(cat({kCommonKeys, kSpectrumKeys,
                              {"t_min_inverse_energy", "t_max_inverse_energy", "t_points"}}));
  SpectrumSource src = spectrum_source(cfg);
  const double t_min = cfg.get_double_or("t_min_inverse_energy", 0.0);
  const double t_max = cfg.get_double("t_max_inverse_energy");
  const long long points = cfg.get_int_or("t_points", 200);

  std::vector<std::string> header = {"t", "re_phi", "im_phi", "abs_phi"};
  if (src.solvable) {
    header.push_back("abs_phi_product");
    header.push_back("gaussian_bound");
    header.push_back("gaussian_applicable");
  }
  CsvWriter csv(header);
  for (double t : linspace(t_min, t_max, points)) {
    const Complex p = phi_direct(src.spectrum, t);
    std::vector<std::string> row = {fmt17(t), fmt17(p.real()), fmt17(p.imag()),
                                    fmt17(std::abs(p))};
    if (src.solvable) {
      const BoundReport g = solvable_gaussian_phi_report(*src.solvable, t);
      row.push_back(fmt17(g.lhs));
      row.push_back(fmt17(g.rhs));
      row.push_back(g.preconditions_hold() ? "1" : "0");
    }
    csv.add_row(std::move(row));
  }
  RunResult res;
  res.files["phi.csv"] = csv.to_string();
  res.message = "phi: " + std::to_string(points) + " grid points";
  return res;
}

RunResult run_bounds(const RunConfig& cfg) {
  cfg.require_known_keys(cat({kCommonKeys,
                              {"dS", "dB", "solvable_epsilons", "epsilon_exponent",
                               "lattice_D", "lattice_M", "lattice_R", "h", "sigma_bar2",
                               "forecast_epsilon", "markov_c", "markov_x", "markov_y",
                               "phi_abs"}}));
  const long long dS = cfg.get_int("dS");
  const long long dB = cfg.get_int("dB");
  const SubsystemSplit split = SubsystemSplit::leading(dS, dB);

  CsvWriter csv({"kind", "name", "value", "lhs", "rhs", "satisfied", "preconditions",
                 "notes"});
  std::string derivation;
  auto add_value = [&](const std::string& kind, const std::string& name, double value,
                       const std::string& notes) {
    csv.add_row({kind, name, fmt17(value), "", "", "", "", notes});
  };

  if (cfg.has("phi_abs")) {
    const double phi_abs = cfg.get_double("phi_abs");
    add_value("bound", "separable_purity_gap", separable_purity_gap_bound(split, phi_abs),
              "|phi|^4 + 4/dB at |phi| = " + fmt17(phi_abs));
    add_value("bound", "separable_trace_distance", separable_distance_bound(split, phi_abs),
              "sqrt(dS) sqrt(|phi|^4 + 4/dB) at |phi| = " + fmt17(phi_abs));
  }

  if (cfg.has("solvable_epsilons")) {
    const SolvableSpectrumSpec spec{cfg.get_double_list("solvable_epsilons")};
    const double eps = cfg.get_double_or("epsilon_exponent", 0.25);
    const ThermalizationForecast f = solvable_timescale_bound(spec, split, eps);
    add_value("forecast", "solvable_T", f.T, "T = N^(eps - 1/2)/epsilon_max, eps = " + fmt17(eps));
    add_value("forecast", "solvable_EDelta2_bound", f.bound_on_EDelta2,
              "a0 dS (epsilon_max/(N^eps sigma_bar) + 1/dB)");
    add_value("constant", "a0_solvable", solvable_a0(), "see derivation.txt");
    derivation += solvable_a0_derivation().to_text();
  }

  if (cfg.has("lattice_D")) {
    LatticeSpec lattice;
    lattice.D = static_cast<int>(cfg.get_int("lattice_D"));
    lattice.M = cfg.get_int("lattice_M");
    lattice.R = cfg.get_int("lattice_R");
    lattice.validate();
    const double h = cfg.get_double_or("h", 1.0);
    const LatticeConstants consts = lemma_constants(lattice, h);
    for (const auto& e : consts.log.entries)
      add_value("constant", e.name, e.value, e.formula);
    derivation += consts.log.to_text();

    double sigma_bar2 = cfg.get_double_or("sigma_bar2", 0.0);
    if (cfg.has("solvable_epsilons") && !cfg.has("sigma_bar2"))
      sigma_bar2 = SolvableSpectrumSpec{cfg.get_double_list("solvable_epsilons")}.sigma_bar2();
    const LatticePhiBound thm = local_phi_time_average_bound(lattice, sigma_bar2, h);
    std::string pre;
    for (const auto& p : thm.report.preconditions)
      pre += p.description + (p.satisfied ? " [ok]; " : " [violated]; ");
    csv.add_row({"bound", thm.report.name, fmt17(thm.T), "",
                 std::isnan(thm.report.rhs) ? "" : fmt17(thm.report.rhs),
                 to_string(thm.report.status()), pre, "value column holds T"});

    if (lattice.theorem1_applicable() && sigma_bar2 > 0.0) {
      const double fe = cfg.get_double_or("forecast_epsilon",
                                          1.0 / (10.0 * static_cast<double>(lattice.D)));
      const ThermalizationForecast f =
          local_thermalization_forecast(lattice, split, sigma_bar2, h, fe);
      add_value("forecast", "local_T", f.T, "T = a0 sigma_bar^2 N^(1/(5D) - 1/2)");
      add_value("forecast", "local_EDelta2_bound", f.bound_on_EDelta2,
                "b0 dS ((1 + sigma_bar^-3)/N^(1/(5D)) + 1/dB)");
      add_value("forecast", "local_probability_floor", *f.probability_floor,
                f.probability_clipped ? "clipped to [0,1] (vacuous)" : "");
      add_value("forecast", "local_distance_threshold", *f.distance_threshold, "");
      add_value("forecast", "local_fraction_floor", *f.fraction_floor,
                f.fraction_clipped ? "clipped to [0,1] (vacuous)" : "");
    }
  }

  if (cfg.has("markov_y")) {
    const double y = cfg.get_double("markov_y");
    const double c = cfg.get_double_or("markov_c", 1.0);
    const double x = cfg.get_double_or("markov_x", 2.0);
    ThermalizationForecast f = compose_markov({}, c, x, y);
    add_value("forecast", "markov_probability_floor", *f.probability_floor,
              std::string("P[Delta <= y c] floor at threshold y c = ") + fmt17(y * c) +
                  (f.probability_clipped ? "; clipped" : ""));
    add_value("forecast", "markov_distance_threshold", *f.distance_threshold, "1/x");
    add_value("forecast", "markov_fraction_floor", *f.fraction_floor,
              std::string("1 - x y c") + (f.fraction_clipped ? "; clipped" : ""));
  }

  RunResult res;
  res.files["bounds.csv"] = csv.to_string();
  if (!derivation.empty()) res.files["derivation.txt"] = derivation;
  res.message = "bounds written";
  return res;
}

RunResult run_quench(const RunConfig& cfg) {
  cfg.require_known_keys(cat({kCommonKeys, kSpectrumKeys,
                              {"dS", "dB", "initial_kind", "t_min_inverse_energy",
                               "t_max_inverse_energy", "t_points"}}));
  SpectrumSource src = spectrum_source(cfg);
  const long long dS = cfg.get_int("dS");
  const long long dB = cfg.get_int("dB");
  if (dS * dB != src.spectrum.dim())
    throw ParseError("config: dS * dB must equal the spectrum dimension");
  if (src.spectrum.dim() > kMaxMonteCarloDim)
    throw CapacityError("quench limited to dimension " + std::to_string(kMaxMonteCarloDim));
  const SubsystemSplit split = SubsystemSplit::leading(dS, dB);
  const std::uint64_t seed = cfg.get_u64_or("seed", 0);
  const InitialState init =
      make_initial(cfg.get_string_or("initial_kind", "product_basis"), dS, dB, seed);

  const double t_min = cfg.get_double_or("t_min_inverse_energy", 0.0);
  const double t_max = cfg.get_double("t_max_inverse_energy");
  const long long points = cfg.get_int_or("t_points", 200);

  DiagonalizedHamiltonian h = randomized_hamiltonian(src.spectrum, SeedStream{seed}.seed_for(0));
  CsvWriter csv({"t", "trace_distance", "purity"});
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(dS);
  if (std::holds_alternative<PureProduct>(init)) {
    const auto& pp = std::get<PureProduct>(init);
    VectorXcd psi0(dS * dB);
    for (long long i = 0; i < dS; ++i) psi0.segment(i * dB, dB) = pp.psiS(i) * pp.psiB;
    PureQuenchCache cache(h, psi0);
    for (double t : linspace(t_min, t_max, points)) {
      MatrixXcd rho_s = reduced_from_pure(cache.state_at(t), dS, dB);
      csv.add_row({fmt17(t),
                   fmt17(trace_distance_raw(rho_s, mixed.matrix())),
                   fmt17(purity_raw(rho_s))});
    }
  } else {
    QuenchCache cache(h, std::get<DensityMatrix>(init));
    for (double t : linspace(t_min, t_max, points)) {
      DensityMatrix rho_s = partial_trace_B(cache.state_at(t), split);
      csv.add_row({fmt17(t), fmt17(trace_distance(rho_s, mixed)),
                   fmt17(purity(rho_s))});
    }
  }
  RunResult res;
  res.files["quench.csv"] = csv.to_string();
  res.message = "quench trajectory written";
  return res;
}

RunResult run_montecarlo(const RunConfig& cfg) {
  cfg.require_known_keys(
      cat({kCommonKeys, kSpectrumKeys,
           {"mode", "dS", "dB", "initial_kind", "n_samples", "t_min_inverse_energy",
            "t_max_inverse_energy", "t_points", "T_inverse_energy", "grid_cap",
            "epsilon_exponent"}}));
  SpectrumSource src = spectrum_source(cfg);
  const std::string mode = cfg.get_string("mode");
  const long long dS = cfg.get_int("dS");
  const long long dB = cfg.get_int("dB");
  if (dS * dB != src.spectrum.dim())
    throw ParseError("config: dS * dB must equal the spectrum dimension");
  const SubsystemSplit split = SubsystemSplit::leading(dS, dB);
  const std::uint64_t seed = cfg.get_u64_or("seed", 0);
  const long long n = cfg.get_int_or("n_samples", mode == "purity" ? 10000 : 1000);
  if (n < 100) throw ParseError("config: n_samples must be >= 100");
  McOptions opt;
  opt.threads = static_cast<int>(cfg.get_int_or("threads", 1));
  const SeedStream seeds{seed};

  CsvWriter csv({"t", "mean", "std_error", "n", "bound_value", "dominance_flag"});
  RunResult res;

  if (mode == "purity" || mode == "distance") {
    const std::string default_init = mode == "purity" ? "product_basis" : "separable_demo";
    const InitialState init =
        make_initial(cfg.get_string_or("initial_kind", default_init), dS, dB, seed);
    const double t_min = cfg.get_double_or("t_min_inverse_energy", 0.0);
    const double t_max = cfg.get_double("t_max_inverse_energy");
    const long long points = cfg.get_int_or("t_points", 10);
    for (double t : linspace(t_min, t_max, points)) {
      EstimatorResult est;
      double bound;
      bool ok;
      if (mode == "purity") {
        est = estimate_purity(src.spectrum, split, init, t, n, seeds, opt);
        bound = expected_purity(split, phi_direct(src.spectrum, t),
                                phi_direct(src.spectrum, 2.0 * t));
        ok = std::abs(est.mean - bound) <= 4.0 * est.std_error;
      } else {
        est = estimate_trace_distance(src.spectrum, split, init, t, n, seeds, opt);
        bound = separable_distance_bound(split, std::abs(phi_direct(src.spectrum, t)));
        ok = est.mean <= bound + 4.0 * est.std_error;
      }
      csv.add_row({fmt17(t), fmt17(est.mean), fmt17(est.std_error), std::to_string(n),
                   fmt17(bound), ok ? "ok" : "violated"});
    }
  } else if (mode == "delta") {
    const InitialState init =
        make_initial(cfg.get_string_or("initial_kind", "product_basis"), dS, dB, seed);
    double T;
    double bound = std::nan("");
    if (cfg.has("T_inverse_energy")) {
      T = cfg.get_double("T_inverse_energy");
    } else if (src.solvable) {
      const double eps = cfg.get_double_or("epsilon_exponent", 0.25);
      const ThermalizationForecast f = solvable_timescale_bound(*src.solvable, split, eps);
      T = f.T;
      bound = std::sqrt(f.bound_on_EDelta2);
    } else {
      throw ParseError("config: delta mode needs T_inverse_energy or a solvable spectrum");
    }
    if (src.solvable && std::isnan(bound)) {
      const double eps = cfg.get_double_or("epsilon_exponent", 0.25);
      bound = std::sqrt(
          solvable_timescale_bound(*src.solvable, split, eps).bound_on_EDelta2);
    }
    const double width = src.spectrum.max_energy() - src.spectrum.min_energy();
    const TimeGrid grid = TimeGrid::resolve(T, width, cfg.get_int_or("grid_cap", 2000));
    EstimatorResult est = estimate_delta(src.spectrum, split, init, T, grid, n, seeds, opt);
    const bool ok = std::isnan(bound) || est.mean <= bound + 4.0 * est.std_error;
    csv.add_row({fmt17(T), fmt17(est.mean), fmt17(est.std_error), std::to_string(n),
                 std::isnan(bound) ? "" : fmt17(bound), ok ? "ok" : "violated"});
  } else {
    throw ParseError("config: mode must be purity, distance or delta");
  }

  res.files["montecarlo.csv"] = csv.to_string();
  res.message = "montecarlo estimates written";
  return res;
}

RunResult run_verify_appendix(const RunConfig& cfg) {
  cfg.require_known_keys(cat({kCommonKeys,
                              {"hamiltonian_file", "chain_N", "chain_R", "chain_h",
                               "partition_kind", "block_size", "buffer_size",
                               "ledger_t_max", "ledger_t_points", "selftest_scale_rhs"}}));
  LocalHamiltonianSpec spec;
  if (cfg.has("hamiltonian_file")) {
    spec = load_local_hamiltonian(cfg.get_string("hamiltonian_file"));
  } else if (cfg.has("chain_N")) {
    spec = random_chain(cfg.get_int("chain_N"), cfg.get_int_or("chain_R", 1),
                        cfg.get_double_or("chain_h", 1.0), cfg.get_u64_or("seed", 0));
  } else {
    throw ParseError("config: give hamiltonian_file or chain_N");
  }

  Partition partition;
  const std::string pk = cfg.get_string_or("partition_kind", "blocks");
  if (pk == "a4") {
    partition = build_partition(spec.lattice);
  } else if (pk == "single") {
    std::vector<long long> all(spec.lattice.n_sites());
    for (long long s = 0; s < spec.lattice.n_sites(); ++s) all[s] = s;
    partition = Partition::custom(spec.lattice, {all});
  } else if (pk == "blocks") {
    if (spec.lattice.D != 1)
      throw ParseError("config: partition_kind=blocks supports 1-D lattices only");
    const long long bs = cfg.get_int_or("block_size", 3);
    const long long fs = cfg.get_int_or("buffer_size", 2 * spec.lattice.R);
    if (fs < 2 * spec.lattice.R)
      throw ParseError("config: buffer_size must be >= 2R for block separation");
    std::vector<std::vector<long long>> blocks;
    long long s = 0;
    const long long n = spec.lattice.n_sites();
    while (s + bs <= n) {
      std::vector<long long> b;
      for (long long k = 0; k < bs; ++k) b.push_back(s + k);
      blocks.push_back(std::move(b));
      s += bs + fs;
    }
    if (blocks.empty()) throw ParseError("config: chain too short for the block size");
    partition = Partition::custom(spec.lattice, std::move(blocks));
  } else {
    throw ParseError("config: partition_kind must be a4, single or blocks");
  }

  LedgerOptions opt;
  const double t_max = cfg.get_double_or("ledger_t_max", 0.5);
  const long long t_points = cfg.get_int_or("ledger_t_points", 11);
  opt.t_values = linspace(0.0, t_max, t_points);
  opt.rhs_scale = cfg.get_double_or("selftest_scale_rhs", 1.0);

  const std::vector<BoundReport> ledger = appendix_ledger(spec, partition, opt);
  long long failures = 0;
  for (const auto& r : ledger)
    if (r.status() == BoundStatus::Fail) ++failures;

  const LatticeConstants consts = lemma_constants(spec.lattice, spec.centered().h);
  RunResult res;
  res.files["ledger.csv"] = csv_of_reports(ledger);
  res.files["derivation.txt"] = consts.log.to_text();
  res.exit_code = failures > 0 ? 3 : 0;
  res.message = failures > 0
                    ? "verification FAILED: " + std::to_string(failures) + " inequalities"
                    : "all applicable inequalities hold";
  return res;
}

RunResult run_partition(const RunConfig& cfg) {
  cfg.require_known_keys(cat({kCommonKeys, {"lattice_D", "lattice_M", "lattice_R"}}));
  LatticeSpec lattice;
  lattice.D = static_cast<int>(cfg.get_int("lattice_D"));
  lattice.M = cfg.get_int("lattice_M");
  lattice.R = cfg.get_int("lattice_R");
  lattice.validate();
  const Partition p = build_partition(lattice);
  CsvWriter csv({"kind", "index", "size", "last_axis_min", "last_axis_max"});
  auto range_of = [&](const std::vector<long long>& sites) {
    long long lo = lattice.M, hi = 1;
    for (long long s : sites) {
      const long long last = s % lattice.M + 1;
      lo = std::min(lo, last);
      hi = std::max(hi, last);
    }
    return std::make_pair(lo, hi);
  };
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    const auto [lo, hi] = range_of(p.blocks[k]);
    csv.add_row({"block", std::to_string(k), std::to_string(p.blocks[k].size()),
                 std::to_string(lo), std::to_string(hi)});
  }
  for (size_t k = 0; k < p.buffers.size(); ++k) {
    if (p.buffers[k].empty()) continue;
    const auto [lo, hi] = range_of(p.buffers[k]);
    csv.add_row({"buffer", std::to_string(k), std::to_string(p.buffers[k].size()),
                 std::to_string(lo), std::to_string(hi)});
  }
  csv.add_row({"meta", "K", std::to_string(p.K), "", ""});
  csv.add_row({"meta", "slab_width", fmt17(p.slab_width), "", ""});
  csv.add_row({"meta", "theorem1_applicable", lattice.theorem1_applicable() ? "1" : "0", "",
               ""});
  RunResult res;
  res.files["partition.csv"] = csv.to_string();
  res.message = "partition written (K = " + std::to_string(p.K) + ")";
  return res;
}

RunResult run(const std::string& subcommand, RunConfig cfg) {
  RunResult res;
  try {
    if (subcommand == "phi")
      res = run_phi(cfg);
    else if (subcommand == "bounds")
      res = run_bounds(cfg);
    else if (subcommand == "quench")
      res = run_quench(cfg);
    else if (subcommand == "montecarlo")
      res = run_montecarlo(cfg);
    else if (subcommand == "verify-appendix")
      res = run_verify_appendix(cfg);
    else if (subcommand == "partition")
      res = run_partition(cfg);
    else {
      res.exit_code = 1;
      res.message = "unknown subcommand '" + subcommand + "'";
      return res;
    }
  } catch (const ParseError& e) {
    res.exit_code = 1;
    res.message = std::string("error: ") + e.what();
    return res;
  } catch (const CapacityError& e) {
    res.exit_code = 2;
    res.message = std::string("capacity error: ") + e.what();
    return res;
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.message = std::string("error: ") + e.what();
    return res;
  }
  res.files["config_snapshot.txt"] = cfg.snapshot();
  return res;
}

}  // namespace harness
}  // namespace randtherm
