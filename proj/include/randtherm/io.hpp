#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "randtherm/model.hpp"
#include "randtherm/reports.hpp"

namespace randtherm {

// All floats in emitted files carry 17 significant digits.
std::string fmt17(double v);

// Minimal CSV writer: one header, rows of preformatted cells.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_of_reports(const std::vector<BoundReport>& reports);

// Spectrum file: one energy per line, optional leading header
// "# d=<int> dS=<int> dB=<int>", '#' comments elsewhere ignored.
struct SpectrumFile {
  SpectrumTable spectrum;
  std::optional<long long> dS;
  std::optional<long long> dB;
};
SpectrumFile load_spectrum(const std::filesystem::path& path);
void save_spectrum(const std::filesystem::path& path, const SpectrumTable& spectrum,
                   std::optional<long long> dS = {}, std::optional<long long> dB = {});

// Local-Hamiltonian spec file, structured text:
//   lattice <D> <M> <R>
//   sitedims uniform <d>        (or: sitedims <d_0> ... <d_{N-1}>)
//   norm_bound <h>
//   term
//   anchor <c_1> ... <c_D>
//   offsets <k>
//   <D integers per line, k lines>            (l1 offsets from the anchor)
//   matrix <dim>
//   <dim lines of dim re/im pairs>
LocalHamiltonianSpec load_local_hamiltonian(const std::filesystem::path& path);
void save_local_hamiltonian(const std::filesystem::path& path,
                            const LocalHamiltonianSpec& spec);

// Flat key = value configuration with typed accessors. Unknown keys are
// rejected against a per-subcommand schema at the CLI layer.
class RunConfig {
 public:
  static RunConfig from_file(const std::filesystem::path& path);
  static RunConfig from_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int_or(const std::string& key, long long fallback) const;
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;

  void set(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& entries() const { return kv_; }

  // Normalized, sorted snapshot; re-running a snapshot reproduces the run.
  std::string snapshot() const;
  void require_known_keys(const std::vector<std::string>& allowed) const;

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace randtherm
