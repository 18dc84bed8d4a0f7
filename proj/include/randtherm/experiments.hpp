#pragma once

#include <map>
#include <string>

#include "randtherm/io.hpp"
#include "randtherm/montecarlo.hpp"

namespace randtherm {

// Deterministic random instances for experiments and verification runs.

// d energies drawn uniformly from [0, width].
SpectrumTable random_spectrum(long long d, double width, std::uint64_t seed);

// Open 1-D chain with one term per site, supported on the radius-R ball of
// its anchor. Terms are Hermitian, traceless (centered), and scaled to
// operator norm exactly h.
LocalHamiltonianSpec random_chain(long long n_sites, long long R, double h,
                                  std::uint64_t seed);

// Named initial states for the harness: "product_basis", "product_haar",
// "separable_demo" (a genuinely mixed separable two-component state).
InitialState make_initial(const std::string& kind, long long dS, long long dB,
                          std::uint64_t seed);

namespace harness {

// Output files of one run, keyed by file name. The CLI writes them to the
// output directory; tests inspect them in memory.
struct RunResult {
  int exit_code = 0;
  std::map<std::string, std::string> files;
  std::string message;  // one-line status for the console
};

RunResult run_phi(const RunConfig& cfg);
RunResult run_bounds(const RunConfig& cfg);
RunResult run_quench(const RunConfig& cfg);
RunResult run_montecarlo(const RunConfig& cfg);
RunResult run_verify_appendix(const RunConfig& cfg);
RunResult run_partition(const RunConfig& cfg);

// Dispatch by subcommand name; maps exceptions to exit codes
// (1 usage/parse, 2 capacity, 3 verification failure) and adds the config
// snapshot to the outputs.
RunResult run(const std::string& subcommand, RunConfig cfg);

}  // namespace harness
}  // namespace randtherm
