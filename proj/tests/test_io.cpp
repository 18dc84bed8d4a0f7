#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "randtherm/experiments.hpp"
#include "randtherm/io.hpp"

using namespace randtherm;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "randtherm_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("fmt17 round-trips doubles") {
  GaussianRng rng(12);
  for (int k = 0; k < 200; ++k) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, 8.0 * (rng.uniform() - 0.5));
    CHECK(std::stod(fmt17(v)) == v);
  }
}

TEST_CASE("config parsing") {
  const RunConfig cfg = RunConfig::from_string(
      "# comment\n"
      "seed = 42\n"
      "t_max_inverse_energy = 2.5   # trailing comment\n"
      "solvable_epsilons = 1,2,0.5\n");
  CHECK(cfg.get_u64_or("seed", 0) == 42);
  CHECK(cfg.get_double("t_max_inverse_energy") == 2.5);
  CHECK(cfg.get_double_list("solvable_epsilons") == std::vector<double>{1.0, 2.0, 0.5});
  CHECK_THROWS_AS(cfg.get_double("missing"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_string("novalue\n"), ParseError);
  CHECK_THROWS_AS(cfg.require_known_keys({"seed"}), ParseError);
  CHECK_NOTHROW(cfg.require_known_keys({"seed", "t_max_inverse_energy", "solvable_epsilons"}));
  // snapshot is sorted and reparses identically
  const RunConfig again = RunConfig::from_string(cfg.snapshot());
  CHECK(again.snapshot() == cfg.snapshot());
}

TEST_CASE("spectrum file round trip") {
  const fs::path p = temp_file("spec.txt");
  const SpectrumTable s = random_spectrum(16, 10.0, 9);
  save_spectrum(p, s, 2, 8);
  const SpectrumFile loaded = load_spectrum(p);
  REQUIRE(loaded.spectrum.dim() == 16);
  for (int k = 0; k < 16; ++k) CHECK(loaded.spectrum.energies[k] == s.energies[k]);
  CHECK(loaded.dS.value() == 2);
  CHECK(loaded.dB.value() == 8);

  std::ofstream bad(p);
  bad << "1.0\nnot_a_number\n";
  bad.close();
  try {
    load_spectrum(p);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);  // line number
  }
}

TEST_CASE("local hamiltonian file round trip") {
  const fs::path p = temp_file("ham.txt");
  const LocalHamiltonianSpec spec = random_chain(5, 1, 1.0, 2);
  save_local_hamiltonian(p, spec);
  const LocalHamiltonianSpec loaded = load_local_hamiltonian(p);
  CHECK(loaded.lattice.M == 5);
  REQUIRE(loaded.terms.size() == spec.terms.size());
  for (size_t k = 0; k < spec.terms.size(); ++k) {
    CHECK(loaded.terms[k].anchor == spec.terms[k].anchor);
    CHECK(loaded.terms[k].support == spec.terms[k].support);
    CHECK((loaded.terms[k].matrix - spec.terms[k].matrix).cwiseAbs().maxCoeff() < 1e-15);
  }
  CHECK_NOTHROW(loaded.validate());
}

TEST_CASE("phi run") {
  RunConfig cfg;
  cfg.set("solvable_epsilons", "1,2");
  cfg.set("t_min_inverse_energy", "1");
  cfg.set("t_max_inverse_energy", "1");
  cfg.set("t_points", "1");
  const auto res = harness::run("phi", cfg);
  REQUIRE(res.exit_code == 0);
  const std::string& csv = res.files.at("phi.csv");
  CHECK(csv.find("abs_phi_product") != std::string::npos);
  CHECK(csv.find("0.47415988") != std::string::npos);

  SUBCASE("constant spectrum gives |phi| = 1 on the grid") {
    RunConfig c2;
    const fs::path p = temp_file("flat.txt");
    SpectrumTable flat;
    flat.energies.assign(4, 2.0);
    save_spectrum(p, flat);
    c2.set("spectrum_file", p.string());
    c2.set("t_max_inverse_energy", "3");
    c2.set("t_points", "7");
    const auto r2 = harness::run("phi", c2);
    REQUIRE(r2.exit_code == 0);
    std::istringstream is(r2.files.at("phi.csv"));
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
      const auto last = line.rfind(',');
      CHECK(std::stod(line.substr(last + 1)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("empty grid emits a header-only csv") {
    RunConfig c3;
    c3.set("solvable_epsilons", "1");
    c3.set("t_max_inverse_energy", "1");
    c3.set("t_points", "0");
    const auto r3 = harness::run("phi", c3);
    REQUIRE(r3.exit_code == 0);
    CHECK(r3.files.at("phi.csv") == "t,re_phi,im_phi,abs_phi,abs_phi_product,"
                                    "gaussian_bound,gaussian_applicable\n");
  }
  SUBCASE("unknown keys are usage errors") {
    RunConfig c4;
    c4.set("solvable_epsilons", "1");
    c4.set("t_max_inverse_energy", "1");
    c4.set("bogus", "1");
    CHECK(harness::run("phi", c4).exit_code == 1);
  }
}

TEST_CASE("bounds run") {
  RunConfig cfg;
  cfg.set("dS", "2");
  cfg.set("dB", "16");
  cfg.set("lattice_D", "1");
  cfg.set("lattice_M", "32");
  cfg.set("lattice_R", "1");
  cfg.set("h", "1");
  cfg.set("sigma_bar2", "0.25");
  cfg.set("markov_y", "1");
  cfg.set("markov_c", "0.1");
  const auto res = harness::run("bounds", cfg);
  REQUIRE(res.exit_code == 0);
  const std::string& csv = res.files.at("bounds.csv");
  CHECK(csv.find("constant,c2,5,") != std::string::npos);
  CHECK(csv.find("constant,c4,1685,") != std::string::npos);
  CHECK(csv.find("markov_probability_floor,0,") != std::string::npos);
  CHECK(res.files.count("derivation.txt") == 1);

  SUBCASE("small lattice marks the time-average bound not applicable") {
    cfg.set("lattice_M", "16");
    const auto r2 = harness::run("bounds", cfg);
    REQUIRE(r2.exit_code == 0);
    CHECK(r2.files.at("bounds.csv").find("local_phi_time_average") != std::string::npos);
    CHECK(r2.files.at("bounds.csv").find("not-applicable") != std::string::npos);
  }
}

TEST_CASE("quench run") {
  RunConfig cfg;
  cfg.set("random_spectrum_d", "8");
  cfg.set("dS", "2");
  cfg.set("dB", "4");
  cfg.set("seed", "77");
  cfg.set("t_max_inverse_energy", "2");
  cfg.set("t_points", "5");
  const auto a = harness::run("quench", cfg);
  const auto b = harness::run("quench", cfg);
  REQUIRE(a.exit_code == 0);
  CHECK(a.files.at("quench.csv") == b.files.at("quench.csv"));  // byte-identical rerun

  SUBCASE("locally maximally mixed state starts at distance zero") {
    cfg.set("initial_kind", "maximally_mixed_s");
    cfg.set("t_points", "1");
    cfg.set("t_max_inverse_energy", "0");
    const auto r = harness::run("quench", cfg);
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.files.at("quench.csv"));
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    const auto first_comma = row.find(',');
    const auto second_comma = row.find(',', first_comma + 1);
    CHECK(std::stod(row.substr(first_comma + 1, second_comma - first_comma - 1)) < 1e-12);
  }
  SUBCASE("constant spectrum gives a flat trajectory") {
    const fs::path p = temp_file("flat2.txt");
    SpectrumTable flat;
    flat.energies.assign(8, 1.5);
    save_spectrum(p, flat);
    RunConfig c2;
    c2.set("spectrum_file", p.string());
    c2.set("dS", "2");
    c2.set("dB", "4");
    c2.set("t_max_inverse_energy", "3");
    c2.set("t_points", "4");
    const auto r = harness::run("quench", c2);
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.files.at("quench.csv"));
    std::string line;
    std::getline(is, line);
    std::vector<std::pair<double, double>> rows;
    while (std::getline(is, line)) {
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      rows.emplace_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)),
                        std::stod(line.substr(c2 + 1)));
    }
    for (const auto& [dist, pur] : rows) {
      CHECK(std::abs(dist - rows.front().first) < 1e-12);
      CHECK(std::abs(pur - rows.front().second) < 1e-12);
    }
  }
  SUBCASE("capacity produces exit code 2") {
    RunConfig c3;
    c3.set("random_spectrum_d", "8192");
    c3.set("dS", "2");
    c3.set("dB", "4096");
    c3.set("t_max_inverse_energy", "1");
    CHECK(harness::run("quench", c3).exit_code == 2);
  }
}

TEST_CASE("montecarlo run") {
  RunConfig cfg;
  cfg.set("mode", "purity");
  cfg.set("random_spectrum_d", "8");
  cfg.set("dS", "2");
  cfg.set("dB", "4");
  cfg.set("n_samples", "150");
  cfg.set("t_max_inverse_energy", "1.5");
  cfg.set("t_points", "3");
  cfg.set("seed", "5");
  const auto res = harness::run("montecarlo", cfg);
  REQUIRE(res.exit_code == 0);
  const std::string& csv = res.files.at("montecarlo.csv");
  CHECK(csv.find("dominance_flag") != std::string::npos);
  CHECK(csv.find("violated") == std::string::npos);
  const auto res2 = harness::run("montecarlo", cfg);
  CHECK(res2.files.at("montecarlo.csv") == csv);

  SUBCASE("delta mode with a solvable spectrum") {
    RunConfig c2;
    c2.set("mode", "delta");
    c2.set("solvable_epsilons", "1,1,1,1,1,1");
    c2.set("dS", "2");
    c2.set("dB", "32");
    c2.set("n_samples", "100");
    c2.set("grid_cap", "60");
    c2.set("seed", "6");
    const auto r = harness::run("montecarlo", c2);
    REQUIRE(r.exit_code == 0);
    CHECK(r.files.at("montecarlo.csv").find("ok") != std::string::npos);
  }
}

TEST_CASE("verify-appendix run") {
  RunConfig cfg;
  cfg.set("chain_N", "8");
  cfg.set("seed", "3");
  cfg.set("ledger_t_points", "6");
  const auto res = harness::run("verify-appendix", cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.files.at("ledger.csv").find("phi_buffer_truncation") != std::string::npos);
  CHECK(res.files.count("derivation.txt") == 1);

  SUBCASE("forced violation self-test exits nonzero") {
    cfg.set("selftest_scale_rhs", "1e-6");
    CHECK(harness::run("verify-appendix", cfg).exit_code == 3);
  }
  SUBCASE("all-zero hamiltonian passes") {
    RunConfig c2;
    c2.set("chain_N", "6");
    c2.set("chain_h", "0");
    c2.set("seed", "3");
    const auto r = harness::run("verify-appendix", c2);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("partition run") {
  RunConfig cfg;
  cfg.set("lattice_D", "1");
  cfg.set("lattice_M", "32");
  cfg.set("lattice_R", "1");
  const auto res = harness::run("partition", cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.files.at("partition.csv").find("meta,K,3") != std::string::npos);
  CHECK(res.files.at("partition.csv").find("block,0,8,1,8") != std::string::npos);
}

TEST_CASE("dispatch") {
  RunConfig cfg;
  CHECK(harness::run("nope", cfg).exit_code == 1);
  CHECK(harness::run("phi", cfg).exit_code == 1);  // missing keys
}
