#include <doctest.h>

#include "randtherm/bounds.hpp"
#include "randtherm/experiments.hpp"
#include "randtherm/montecarlo.hpp"
#include "randtherm/spectral.hpp"

using namespace randtherm;

TEST_CASE("expected purity identity and limit cases") {
  for (long long dS = 2; dS <= 16; ++dS)
    for (long long dB = 2; dB <= 16; ++dB) {
      const SubsystemSplit split = SubsystemSplit::leading(dS, dB);
      CHECK(std::abs(expected_purity(split, 1.0, 1.0) - 1.0) < 1e-12);
      const double want = static_cast<double>(split.delta()) /
                          (1.0 + static_cast<double>(split.d()));
      CHECK(std::abs(expected_purity(split, 0.0, 0.0) - want) < 1e-12);
    }
  // dS = 2, dB = 4: delta/(1+d) = 6/9
  CHECK(std::abs(expected_purity(SubsystemSplit::leading(2, 4), 0.0, 0.0) - 2.0 / 3.0) <
        1e-14);
  CHECK_THROWS_AS(expected_purity(SubsystemSplit::leading(1, 1), 0.5, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(expected_purity(SubsystemSplit::leading(2, 2), 1.5, 0.0),
                  std::invalid_argument);
}

TEST_CASE("expected purity stays in the physical range on reachable phi pairs") {
  for (std::uint64_t s = 1; s <= 8; ++s) {
    const SpectrumTable spec = random_spectrum(32, 10.0, s);
    const SubsystemSplit split = SubsystemSplit::leading(4, 8);
    for (double t : {0.2, 0.9, 3.3, 11.0}) {
      const double p =
          expected_purity(split, phi_direct(spec, t), phi_direct(spec, 2.0 * t));
      CHECK(p >= 1.0 / static_cast<double>(split.dS) - 1e-12);
      CHECK(p <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("expected purity matches a Haar Monte Carlo oracle") {
  // Spectrum with 4 energies at +pi/3 and 4 at -pi/3 realizes
  // phi(1) = cos(pi/3) = 1/2 and phi(2) = cos(2 pi/3) = -1/2.
  SpectrumTable spec;
  spec.energies = {M_PI / 3, M_PI / 3, M_PI / 3, M_PI / 3,
                   -M_PI / 3, -M_PI / 3, -M_PI / 3, -M_PI / 3};
  const double t = 1.0;
  CHECK(std::abs(phi_direct(spec, t) - Complex(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(phi_direct(spec, 2.0 * t) - Complex(-0.5, 0.0)) < 1e-14);

  const SubsystemSplit split = SubsystemSplit::leading(2, 4);
  const double formula = expected_purity(split, 0.5, -0.5);
  const InitialState init = make_initial("product_basis", 2, 4, 0);
  const EstimatorResult mc =
      estimate_purity(spec, split, init, t, 100000, SeedStream{314159});
  CHECK(std::abs(mc.mean - formula) <= 4.0 * mc.std_error);
}

TEST_CASE("separable purity gap and distance bounds") {
  const SubsystemSplit s24 = SubsystemSplit::leading(2, 4);
  const SubsystemSplit s28 = SubsystemSplit::leading(2, 8);
  CHECK(std::abs(separable_purity_gap_bound(s24, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(separable_purity_gap_bound(s28, 1.0) - 1.5) < 1e-15);
  // sqrt(2) sqrt(1.5) = sqrt(3)
  CHECK(std::abs(separable_distance_bound(s28, 1.0) - std::sqrt(3.0)) < 1e-12);
  // vanishing-bath limit at phi = 0
  CHECK(separable_distance_bound(SubsystemSplit::leading(2, 1LL << 40), 0.0) < 1e-4);
  CHECK_THROWS_AS(separable_purity_gap_bound(s24, 1.5), std::invalid_argument);
}

TEST_CASE("monte carlo distance dominance at small scale") {
  const SpectrumTable spec = random_spectrum(32, 10.0, 4242);
  const SubsystemSplit split = SubsystemSplit::leading(2, 16);
  const InitialState init = make_initial("separable_demo", 2, 16, 0);
  for (double t : {0.3, 1.1}) {
    const EstimatorResult mc =
        estimate_trace_distance(spec, split, init, t, 200, SeedStream{5150});
    const double bound = separable_distance_bound(split, std::abs(phi_direct(spec, t)));
    CHECK(mc.mean <= bound + 4.0 * mc.std_error);
  }
}

TEST_CASE("solvable gaussian report") {
  SUBCASE("t = 0 is satisfied with equality") {
    const BoundReport r = solvable_gaussian_phi_report({{1.0, 0.5}}, 0.0);
    CHECK(r.lhs == 1.0);
    CHECK(r.rhs == 1.0);
    CHECK(r.status() == BoundStatus::Pass);
  }
  SUBCASE("uniform couplings at t = 1") {
    const BoundReport r = solvable_gaussian_phi_report({std::vector<double>(8, 1.0)}, 1.0);
    CHECK(std::abs(r.lhs - std::pow(std::cos(0.5), 8)) < 1e-12);  // ~0.3434
    CHECK(std::abs(r.rhs - std::exp(-1.0)) < 1e-12);              // ~0.3679
    CHECK(r.status() == BoundStatus::Pass);
  }
  SUBCASE("outside the stated window the report makes no claim") {
    const BoundReport r = solvable_gaussian_phi_report({{2.0}}, 4.0);
    CHECK_FALSE(r.preconditions_hold());
    CHECK(r.status() == BoundStatus::NotApplicable);
  }
}

TEST_CASE("solvable timescale forecast") {
  const SubsystemSplit split = SubsystemSplit::leading(2, 1 << 9);
  const SolvableSpectrumSpec uniform10{std::vector<double>(10, 1.0)};
  SUBCASE("exponent 1/2 gives T = 1/epsilon_max") {
    const ThermalizationForecast f = solvable_timescale_bound(uniform10, split, 0.5);
    CHECK(std::abs(f.T - 1.0) < 1e-14);
  }
  SUBCASE("bound decreases with N at fixed sigma_bar, epsilon_max, dB") {
    double prev = 1e300;
    for (int n : {4, 9, 16, 25}) {
      const SolvableSpectrumSpec spec{std::vector<double>(n, 1.0)};  // sigma_bar = 1/2
      const double b = solvable_timescale_bound(spec, split, 0.25).bound_on_EDelta2;
      CHECK(b < prev);
      prev = b;
    }
  }
  SUBCASE("zero couplings are rejected") {
    CHECK_THROWS_AS(solvable_timescale_bound({{0.0, 0.0}}, split, 0.25), std::domain_error);
  }
  SUBCASE("a0 derivation replays") {
    CHECK(solvable_a0() == 8.0);
    const DerivationLog log = solvable_a0_derivation();
    CHECK(recompute_derived(log.entries.front()) == 8.0);
  }
}

TEST_CASE("lattice phi time-average bound") {
  SUBCASE("applicability") {
    const LatticePhiBound no = local_phi_time_average_bound(LatticeSpec{1, 16, 1}, 0.25, 1.0);
    CHECK(no.report.status() == BoundStatus::NotApplicable);
    const LatticePhiBound yes =
        local_phi_time_average_bound(LatticeSpec{1, 32, 1}, 0.25, 1.0);
    CHECK(yes.report.status() == BoundStatus::NotEvaluated);  // no exact lhs at this scale
    CHECK(yes.T > 0.0);
    CHECK(yes.phi_average_bound > 0.0);
  }
  SUBCASE("T scales linearly in sigma_bar^2") {
    const LatticeSpec lattice{1, 32, 1};
    const double t1 = local_phi_time_average_bound(lattice, 0.25, 1.0).T;
    const double t4 = local_phi_time_average_bound(lattice, 1.0, 1.0).T;
    CHECK(std::abs(t4 - 4.0 * t1) < 1e-12 * t4);
  }
}

TEST_CASE("local thermalization forecast") {
  const LatticeSpec lattice{1, 32, 1};
  const SubsystemSplit split = SubsystemSplit::leading(2, 16);
  SUBCASE("epsilon = 1/(5D) has a vacuous probability floor") {
    const ThermalizationForecast f =
        local_thermalization_forecast(lattice, split, 0.25, 1.0, 1.0 / 5.0);
    CHECK(*f.probability_floor == 0.0);
    CHECK(f.probability_clipped);  // floor hit the boundary: vacuous
  }
  SUBCASE("bath term vanishes as dB grows") {
    const double eps = 0.05;
    const ThermalizationForecast small =
        local_thermalization_forecast(lattice, SubsystemSplit::leading(2, 1LL << 30), 0.25,
                                      1.0, eps);
    const LatticeConstants consts = lemma_constants(lattice, 1.0);
    const double n = 32.0;
    const double limit =
        1.0 - std::sqrt(consts.b0_forecast * 2.0 * (1.0 + 8.0) / std::pow(n, eps));
    const double raw = 1.0 - std::sqrt(consts.b0_forecast * 2.0 *
                                       ((1.0 + 8.0) / std::pow(n, eps) +
                                        std::pow(n, 0.2) / (std::pow(n, eps) * (1LL << 30))));
    CHECK(std::abs(raw - limit) < 1e-6);
    CHECK(*small.fraction_floor == std::clamp(raw, 0.0, 1.0));
  }
  SUBCASE("inapplicable lattice throws") {
    CHECK_THROWS_AS(local_thermalization_forecast(LatticeSpec{1, 16, 1}, split, 0.25, 1.0,
                                                  0.1),
                    std::domain_error);
  }
}

TEST_CASE("markov empirical check") {
  SUBCASE("y = 1 floor is zero and always satisfied") {
    const BoundReport r = markov_empirical_check({0.5, 0.9, 1.4}, 1.0, 1.0);
    CHECK(r.lhs == 0.0);
    CHECK(r.status() == BoundStatus::Pass);
  }
  SUBCASE("all samples at c/2 with y = 2") {
    const std::vector<double> samples(50, 0.05);
    const BoundReport r = markov_empirical_check(samples, 0.1, 2.0);
    CHECK(r.rhs >= 1.0);  // frequency 1
    CHECK(r.lhs == 0.5);
    CHECK(r.status() == BoundStatus::Pass);
  }
  SUBCASE("vacuous when the empirical mean exceeds c") {
    const BoundReport r = markov_empirical_check({2.0, 2.0}, 0.1, 2.0);
    CHECK(r.status() == BoundStatus::NotApplicable);
  }
}
