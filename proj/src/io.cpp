#include "randtherm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace randtherm {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size())
    throw std::invalid_argument("csv: row width does not match header");
  rows_.push_back(std::move(cells));
}

std::string CsvWriter::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
  os << "\n";
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

void CsvWriter::write(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << to_string();
}

std::string csv_of_reports(const std::vector<BoundReport>& reports) {
  CsvWriter csv({"name", "block", "param", "lhs", "rhs", "slack", "preconditions",
                 "satisfied", "tolerance"});
  for (const auto& r : reports) {
    std::string pre;
    for (const auto& p : r.preconditions) {
      if (!pre.empty()) pre += "; ";
      pre += p.description + (p.satisfied ? " [ok]" : " [violated]");
    }
    csv.add_row({r.name, r.block ? std::to_string(*r.block) : "",
                 r.param ? fmt17(*r.param) : "", std::isnan(r.lhs) ? "" : fmt17(r.lhs),
                 std::isnan(r.rhs) ? "" : fmt17(r.rhs),
                 (std::isnan(r.lhs) || std::isnan(r.rhs)) ? "" : fmt17(r.slack()), pre,
                 to_string(r.status()), fmt17(r.tolerance)});
  }
  return csv.to_string();
}

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, long long line,
                             const std::string& what) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double to_double(const std::string& s, const std::filesystem::path& path, long long line) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    parse_fail(path, line, "expected a number, got '" + s + "'");
  }
}

long long to_int(const std::string& s, const std::filesystem::path& path, long long line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    parse_fail(path, line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

SpectrumFile load_spectrum(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open spectrum file: " + path.string());
  SpectrumFile out;
  std::string line;
  long long ln = 0;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream is(line.substr(1));
      std::string tok;
      while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "dS") out.dS = to_int(val, path, ln);
        if (key == "dB") out.dB = to_int(val, path, ln);
      }
      continue;
    }
    out.spectrum.energies.push_back(to_double(line, path, ln));
  }
  if (out.spectrum.energies.empty())
    throw ParseError(path.string() + ": no energies found");
  out.spectrum.validate();
  return out;
}

void save_spectrum(const std::filesystem::path& path, const SpectrumTable& spectrum,
                   std::optional<long long> dS, std::optional<long long> dB) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << "# d=" << spectrum.dim();
  if (dS) f << " dS=" << *dS;
  if (dB) f << " dB=" << *dB;
  f << "\n";
  for (double e : spectrum.energies) f << fmt17(e) << "\n";
}

LocalHamiltonianSpec load_local_hamiltonian(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open hamiltonian file: " + path.string());
  LocalHamiltonianSpec spec;
  bool have_lattice = false;
  std::string line;
  long long ln = 0;

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(f, line)) {
      ++ln;
      if (line.empty() || line[0] == '#') continue;
      toks = tokenize(line);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    if (toks[0] == "lattice") {
      if (toks.size() != 4) parse_fail(path, ln, "lattice needs: lattice D M R");
      spec.lattice.D = static_cast<int>(to_int(toks[1], path, ln));
      spec.lattice.M = to_int(toks[2], path, ln);
      spec.lattice.R = to_int(toks[3], path, ln);
      spec.lattice.validate();
      have_lattice = true;
    } else if (toks[0] == "sitedims") {
      if (!have_lattice) parse_fail(path, ln, "sitedims before lattice");
      const long long n = spec.lattice.n_sites();
      if (toks.size() == 3 && toks[1] == "uniform") {
        spec.site_dims.assign(n, to_int(toks[2], path, ln));
      } else if (static_cast<long long>(toks.size()) == n + 1) {
        spec.site_dims.clear();
        for (long long k = 1; k <= n; ++k)
          spec.site_dims.push_back(to_int(toks[k], path, ln));
      } else {
        parse_fail(path, ln, "sitedims needs 'uniform <d>' or one entry per site");
      }
    } else if (toks[0] == "norm_bound") {
      if (toks.size() != 2) parse_fail(path, ln, "norm_bound needs one value");
      spec.h = to_double(toks[1], path, ln);
    } else if (toks[0] == "term") {
      if (!have_lattice || spec.site_dims.empty())
        parse_fail(path, ln, "term before lattice/sitedims");
      LocalTerm term;
      if (!next_tokens(toks) || toks[0] != "anchor" ||
          static_cast<int>(toks.size()) != spec.lattice.D + 1)
        parse_fail(path, ln, "term needs: anchor <D coordinates>");
      std::vector<long long> anchor(spec.lattice.D);
      for (int k = 0; k < spec.lattice.D; ++k) anchor[k] = to_int(toks[k + 1], path, ln);
      term.anchor = spec.lattice.site_index(anchor);
      if (!next_tokens(toks) || toks[0] != "offsets" || toks.size() != 2)
        parse_fail(path, ln, "term needs: offsets <count>");
      const long long noff = to_int(toks[1], path, ln);
      for (long long q = 0; q < noff; ++q) {
        if (!next_tokens(toks) || static_cast<int>(toks.size()) != spec.lattice.D)
          parse_fail(path, ln, "offset row needs D integers");
        std::vector<long long> c(anchor);
        for (int k = 0; k < spec.lattice.D; ++k) c[k] += to_int(toks[k], path, ln);
        term.support.push_back(spec.lattice.site_index(c));
      }
      std::sort(term.support.begin(), term.support.end());
      if (!next_tokens(toks) || toks[0] != "matrix" || toks.size() != 2)
        parse_fail(path, ln, "term needs: matrix <dim>");
      const long long dim = to_int(toks[1], path, ln);
      term.matrix.resize(dim, dim);
      for (long long r = 0; r < dim; ++r) {
        if (!next_tokens(toks) || static_cast<long long>(toks.size()) != 2 * dim)
          parse_fail(path, ln, "matrix row needs " + std::to_string(2 * dim) + " numbers");
        for (long long cidx = 0; cidx < dim; ++cidx)
          term.matrix(r, cidx) = Complex(to_double(toks[2 * cidx], path, ln),
                                         to_double(toks[2 * cidx + 1], path, ln));
      }
      spec.terms.push_back(std::move(term));
    } else {
      parse_fail(path, ln, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_lattice) throw ParseError(path.string() + ": missing lattice line");
  if (spec.site_dims.empty()) throw ParseError(path.string() + ": missing sitedims line");
  spec.validate();
  return spec;
}

void save_local_hamiltonian(const std::filesystem::path& path,
                            const LocalHamiltonianSpec& spec) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << "lattice " << spec.lattice.D << " " << spec.lattice.M << " " << spec.lattice.R << "\n";
  bool uniform = true;
  for (long long d : spec.site_dims) uniform = uniform && d == spec.site_dims.front();
  if (uniform) {
    f << "sitedims uniform " << spec.site_dims.front() << "\n";
  } else {
    f << "sitedims";
    for (long long d : spec.site_dims) f << " " << d;
    f << "\n";
  }
  f << "norm_bound " << fmt17(spec.h) << "\n";
  for (const auto& t : spec.terms) {
    f << "term\nanchor";
    const auto anchor = spec.lattice.coords(t.anchor);
    for (long long c : anchor) f << " " << c;
    f << "\noffsets " << t.support.size() << "\n";
    for (long long s : t.support) {
      const auto c = spec.lattice.coords(s);
      for (int k = 0; k < spec.lattice.D; ++k)
        f << (k ? " " : "") << (c[k] - anchor[k]);
      f << "\n";
    }
    f << "matrix " << t.matrix.rows() << "\n";
    for (long long r = 0; r < t.matrix.rows(); ++r) {
      for (long long c = 0; c < t.matrix.cols(); ++c)
        f << (c ? " " : "") << fmt17(t.matrix(r, c).real()) << " "
          << fmt17(t.matrix(r, c).imag());
      f << "\n";
    }
  }
}

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open config file: " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return from_string(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

RunConfig RunConfig::from_string(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  long long ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(ln) + ": expected key = value");
    const std::string key = strip(line.substr(0, eq));
    const std::string val = strip(line.substr(eq + 1));
    if (key.empty()) throw ParseError("config line " + std::to_string(ln) + ": empty key");
    cfg.kv_[key] = val;
  }
  return cfg;
}

bool RunConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string RunConfig::get_string(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw ParseError("config: missing key '" + key + "'");
  return it->second;
}

std::string RunConfig::get_string_or(const std::string& key,
                                     const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: key '" + key + "' is not a number: '" + s + "'");
  }
}

double RunConfig::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long long RunConfig::get_int(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: key '" + key + "' is not an integer: '" + s + "'");
  }
}

long long RunConfig::get_int_or(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t RunConfig::get_u64_or(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const std::string s = get_string(key);
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: key '" + key + "' is not an unsigned integer: '" + s + "'");
  }
}

std::vector<double> RunConfig::get_double_list(const std::string& key) const {
  const std::string s = get_string(key);
  std::vector<double> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    try {
      out.push_back(std::stod(cur));
    } catch (const std::exception&) {
      throw ParseError("config: key '" + key + "' has a bad list entry: '" + cur + "'");
    }
  }
  if (out.empty()) throw ParseError("config: key '" + key + "' is an empty list");
  return out;
}

void RunConfig::set(const std::string& key, const std::string& value) { kv_[key] = value; }

std::string RunConfig::snapshot() const {
  std::ostringstream os;
  for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
  return os.str();
}

void RunConfig::require_known_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [k, v] : kv_) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw ParseError("config: unknown key '" + k + "'");
  }
}

}  // namespace randtherm
