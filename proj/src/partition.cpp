#include "randtherm/partition.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "randtherm/quadrature.hpp"

namespace randtherm {

namespace {

constexpr double kPi = 3.14159265358979323846;

unsigned __int128 ipow(unsigned __int128 base, int exp) {
  unsigned __int128 acc = 1;
  for (int k = 0; k < exp; ++k) acc *= base;
  return acc;
}

// a^5 <= b^3 in exact integer arithmetic (both nonnegative).
bool pow5_le_pow3(long long a, long long b) {
  return ipow(static_cast<unsigned __int128>(a), 5) <= ipow(static_cast<unsigned __int128>(b), 3);
}

}  // namespace

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Pass: return "pass";
    case BoundStatus::Fail: return "fail";
    case BoundStatus::NotApplicable: return "not-applicable";
    case BoundStatus::NotEvaluated: return "not-evaluated";
  }
  return "unknown";
}

ThermalizationForecast compose_markov(ThermalizationForecast f, double c, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("markov composition: x, y must be > 0");
  double p = 1.0 - 1.0 / y;
  double frac = 1.0 - x * y * c;
  // a floor at or below zero carries no information: flag it vacuous
  f.probability_clipped = p <= 0.0 || p > 1.0;
  f.fraction_clipped = frac <= 0.0 || frac > 1.0;
  f.probability_floor = std::clamp(p, 0.0, 1.0);
  f.distance_threshold = 1.0 / x;
  f.fraction_floor = std::clamp(frac, 0.0, 1.0);
  return f;
}

long long l1_ball_count(int D, long long r) {
  if (D < 1) throw std::domain_error("ball count: D must be >= 1");
  if (r < 0) throw std::domain_error("ball count: r must be >= 0");
  // f(k, s) = number of k-axis offset vectors with total |.| budget s
  std::vector<long long> f(r + 1, 1);  // k = 0
  for (int k = 1; k <= D; ++k) {
    std::vector<long long> g(r + 1, 0);
    for (long long s = 0; s <= r; ++s)
      for (long long off = -s; off <= s; ++off) g[s] += f[s - std::abs(off)];
    f = std::move(g);
  }
  return f[r];
}

double ball_bound_coeff(int D, long long R) {
  double c = 0.0;
  for (long long r = 1; r <= 4 * R; ++r) {
    const double cnt = static_cast<double>(l1_ball_count(D, r));
    c = std::max(c, (cnt - 1.0) / std::pow(static_cast<double>(r), D));
  }
  return c;
}

std::string DerivationLog::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.name << " = " << std::setprecision(17) << e.value << "\n  formula: " << e.formula
       << "\n  inputs:";
    if (e.inputs.empty()) os << " (none)";
    for (const auto& [n, v] : e.inputs) os << " " << n << "=" << std::setprecision(17) << v;
    os << "\n";
  }
  return os.str();
}

const DerivationEntry* DerivationLog::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {
double input_of(const DerivationEntry& e, const std::string& name) {
  for (const auto& [n, v] : e.inputs)
    if (n == name) return v;
  throw std::invalid_argument("derivation entry " + e.name + ": missing input " + name);
}
}  // namespace

double recompute_derived(const DerivationEntry& e) {
  if (e.name == "beta_2r" || e.name == "beta_4r")
    return static_cast<double>(l1_ball_count(static_cast<int>(input_of(e, "D")),
                                             static_cast<long long>(input_of(e, "r"))));
  if (e.name == "ball_coeff")
    return ball_bound_coeff(static_cast<int>(input_of(e, "D")),
                            static_cast<long long>(input_of(e, "R")));
  if (e.name == "c2") return sqr(input_of(e, "h")) * input_of(e, "beta_2r");
  if (e.name == "c4") {
    const double h = input_of(e, "h");
    const double b2 = input_of(e, "beta_2r");
    const double b4 = input_of(e, "beta_4r");
    return sqr(sqr(h)) * (3.0 * b2 * b4 * b4 + b2 * b2 * b2 + 6.0 * b2 * b4 + 3.0 * b2 * b2);
  }
  if (e.name == "x") {
    const double c2 = input_of(e, "c2");
    const double c4 = input_of(e, "c4");
    return std::min(std::sqrt(1.0 / (c2 * c2 * c2)), 22.0 / (6.0 * std::sqrt(c2 * c4)));
  }
  if (e.name == "appendix_integral") return 57.0 * std::sqrt(kPi);
  if (e.name == "a0_lemma") return input_of(e, "x");
  if (e.name == "b0_lemma") {
    const double h = input_of(e, "h");
    const double b2 = input_of(e, "beta_2r");
    const double c2 = input_of(e, "c2");
    const double integral = input_of(e, "appendix_integral");
    return std::max({sqr(h) * (1.0 + 3.0 * b2) / 6.0, integral, std::cbrt(3.0 * c2)});
  }
  if (e.name == "a0_lattice") return input_of(e, "x") / 8.0;
  if (e.name == "b0_lattice") {
    const double c2 = input_of(e, "c2");
    if (c2 == 0.0) return std::nan("");
    const double x = input_of(e, "x");
    const double r = input_of(e, "R");
    const double b0 = input_of(e, "b0_lemma");
    return b0 * std::max((r + 1.0) * x * x * c2 * c2 / 32.0, 8.0 / x);
  }
  if (e.name == "b0_forecast") return std::max(2.0 * input_of(e, "b0_lattice"), 8.0);
  if (e.name == "a0_solvable") return std::max(2.0 * input_of(e, "gauss_halfline"), 8.0);
  throw std::invalid_argument("derivation entry: unknown name " + e.name);
}

LatticeConstants lemma_constants(const LatticeSpec& lattice, double h) {
  lattice.validate();
  if (h < 0.0) throw std::domain_error("constants: h must be >= 0");
  LatticeConstants c;
  c.h = h;
  c.beta_2r = l1_ball_count(lattice.D, 2 * lattice.R);
  c.beta_4r = l1_ball_count(lattice.D, 4 * lattice.R);
  c.ball_coeff = ball_bound_coeff(lattice.D, lattice.R);
  const double b2 = static_cast<double>(c.beta_2r);
  const double b4 = static_cast<double>(c.beta_4r);
  c.c2 = h * h * b2;
  c.c4 = h * h * h * h * (3.0 * b2 * b4 * b4 + b2 * b2 * b2 + 6.0 * b2 * b4 + 3.0 * b2 * b2);
  c.x = (c.c2 > 0.0) ? std::min(std::sqrt(1.0 / (c.c2 * c.c2 * c.c2)),
                                22.0 / (6.0 * std::sqrt(c.c2 * c.c4)))
                     : std::numeric_limits<double>::infinity();
  const double integral = 57.0 * std::sqrt(kPi);
  c.a0_lemma = c.x;
  c.b0_lemma = std::max({h * h * (1.0 + 3.0 * b2) / 6.0, integral, std::cbrt(3.0 * c.c2)});
  c.a0_lattice = c.x / 8.0;
  c.b0_lattice = (c.c2 > 0.0)
                     ? c.b0_lemma * std::max((static_cast<double>(lattice.R) + 1.0) * c.x *
                                                 c.x * c.c2 * c.c2 / 32.0,
                                             8.0 / c.x)
                     : std::nan("");
  c.b0_forecast = std::max(2.0 * c.b0_lattice, 8.0);
  if (std::isnan(c.b0_lattice)) c.b0_forecast = std::nan("");

  auto& log = c.log.entries;
  const double dd = static_cast<double>(lattice.D);
  const double rr = static_cast<double>(lattice.R);
  log.push_back({"beta_2r", static_cast<double>(c.beta_2r),
                 "exact lattice-point count of the l1 ball of radius 2R in Z^D",
                 {{"D", dd}, {"r", 2.0 * rr}}});
  log.push_back({"beta_4r", static_cast<double>(c.beta_4r),
                 "exact lattice-point count of the l1 ball of radius 4R in Z^D",
                 {{"D", dd}, {"r", 4.0 * rr}}});
  log.push_back({"ball_coeff", c.ball_coeff,
                 "smallest c with ball_count(r) <= 1 + c r^D for 1 <= r <= 4R",
                 {{"D", dd}, {"R", rr}}});
  log.push_back({"c2", c.c2, "h^2 beta_2r", {{"h", h}, {"beta_2r", b2}}});
  log.push_back({"c4", c.c4,
                 "h^4 (3 b2 b4^2 + b2^3 + 6 b2 b4 + 3 b2^2)",
                 {{"h", h}, {"beta_2r", b2}, {"beta_4r", b4}}});
  log.push_back({"x", c.x, "min( sqrt(1/c2^3), 22/(6 sqrt(c2 c4)) )",
                 {{"c2", c.c2}, {"c4", c.c4}}});
  log.push_back({"appendix_integral", integral,
                 "int_0^inf (t^2 + 1) e^{-t^2/36} dt = 54 sqrt(pi) + 3 sqrt(pi)",
                 {}});
  log.push_back({"a0_lemma", c.a0_lemma, "x (admissible-time factor)", {{"x", c.x}}});
  log.push_back({"b0_lemma", c.b0_lemma,
                 "max( h^2 (1 + 3 beta_2r)/6, appendix_integral, (3 c2)^(1/3) )",
                 {{"h", h},
                  {"beta_2r", b2},
                  {"c2", c.c2},
                  {"appendix_integral", integral}}});
  log.push_back({"a0_lattice", c.a0_lattice,
                 "x/8 via |A| <= 4 M^D and max_n |A_n|^(1/2) <= 2 M^(D/2 - 1/5)",
                 {{"x", c.x}}});
  log.push_back({"b0_lattice", c.b0_lattice,
                 "b0_lemma * max( (R+1) x^2 c2^2 / 32, 8/x ), using sigma_bar^2 <= c2 and "
                 "|C| <= 2 (R+1) M^(D - 3/5)",
                 {{"b0_lemma", c.b0_lemma}, {"R", rr}, {"x", c.x}, {"c2", c.c2}}});
  log.push_back({"b0_forecast", c.b0_forecast,
                 "max( 2 b0_lattice, 8 ) from (u + 2/sqrt(dB))^2 <= 2 u^2 + 8/dB and u^2 <= u",
                 {{"b0_lattice", c.b0_lattice}}});
  return c;
}

double admissible_time_window(double sigma2, long long total_block_sites,
                              long long max_block_size, const LatticeConstants& consts) {
  if (consts.c2 == 0.0) return std::numeric_limits<double>::infinity();
  if (total_block_sites <= 0 || max_block_size <= 0) return 0.0;
  return consts.x * sigma2 /
         (static_cast<double>(total_block_sites) *
          std::sqrt(static_cast<double>(max_block_size)));
}

long long Partition::total_block_sites() const {
  long long n = 0;
  for (const auto& b : blocks) n += static_cast<long long>(b.size());
  return n;
}

long long Partition::max_block_size() const {
  long long m = 0;
  for (const auto& b : blocks) m = std::max(m, static_cast<long long>(b.size()));
  return m;
}

long long Partition::buffer_size() const {
  long long n = 0;
  for (const auto& c : buffers) n += static_cast<long long>(c.size());
  return n;
}

std::vector<long long> Partition::all_buffer_sites() const {
  std::vector<long long> out;
  for (const auto& c : buffers) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Partition::validate() const {
  lattice.validate();
  if (blocks.empty()) throw std::invalid_argument("partition: no blocks");
  const long long n = lattice.n_sites();
  std::vector<long long> all;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    all.insert(all.end(), b.begin(), b.end());
  }
  for (const auto& c : buffers) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (static_cast<long long>(all.size()) != n)
    throw std::invalid_argument("partition: blocks and buffers do not cover the lattice");
  for (long long i = 0; i < n; ++i)
    if (all[i] != i)
      throw std::invalid_argument("partition: blocks and buffers overlap or miss sites");

  // inter-block distance >= 2R + 1
  const long long need = 2 * lattice.R + 1;
  if (slab_built) {
    // Slabs span the full cross-section; distance reduces to the last axis.
    std::vector<std::pair<long long, long long>> ranges;
    for (const auto& b : blocks) {
      long long lo = lattice.M + 1, hi = 0;
      for (long long s : b) {
        const long long last = s % lattice.M + 1;
        lo = std::min(lo, last);
        hi = std::max(hi, last);
      }
      ranges.emplace_back(lo, hi);
    }
    std::sort(ranges.begin(), ranges.end());
    for (size_t k = 1; k < ranges.size(); ++k)
      if (ranges[k].first - ranges[k - 1].second < need)
        throw std::invalid_argument("partition: blocks closer than 2R + 1");
  } else {
    for (size_t a = 0; a < blocks.size(); ++a)
      for (size_t b = a + 1; b < blocks.size(); ++b)
        for (long long i : blocks[a])
          for (long long j : blocks[b])
            if (lattice.dist(i, j) < need)
              throw std::invalid_argument("partition: blocks closer than 2R + 1");
  }

  if (slab_built && lattice.theorem1_applicable()) {
    // Exact size windows: M^(D-2/5)/2 <= |A_k| <= 4 M^(D-2/5),
    // |C_k| <= 2 (R+1) M^(D-1), M^(2/5)/4 <= K <= M^(2/5).
    long long cross = 1;
    for (int k = 0; k < lattice.D - 1; ++k) cross *= lattice.M;
    for (const auto& b : blocks) {
      const long long w = static_cast<long long>(b.size()) / cross;
      if (!(ipow(lattice.M, 3) <= 32 * ipow(w, 5)))
        throw std::invalid_argument("partition: block below size window");
      if (!(ipow(w, 5) <= 1024 * ipow(lattice.M, 3)))
        throw std::invalid_argument("partition: block above size window");
    }
    for (const auto& c : buffers)
      if (static_cast<long long>(c.size()) > 2 * (lattice.R + 1) * cross)
        throw std::invalid_argument("partition: buffer above size window");
    if (!(ipow(K, 5) <= ipow(lattice.M, 2)))
      throw std::invalid_argument("partition: K above window");
    if (!(ipow(lattice.M, 2) <= ipow(4 * K, 5)))
      throw std::invalid_argument("partition: K below window");
  }
}

Partition Partition::custom(const LatticeSpec& lattice,
                            std::vector<std::vector<long long>> blocks) {
  Partition p;
  p.lattice = lattice;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  p.blocks = std::move(blocks);
  p.K = static_cast<long long>(p.blocks.size());
  std::vector<bool> in_block(lattice.n_sites(), false);
  for (const auto& b : p.blocks)
    for (long long s : b) {
      if (s < 0 || s >= lattice.n_sites())
        throw std::invalid_argument("partition: site out of range");
      in_block[s] = true;
    }
  std::vector<long long> rest;
  for (long long s = 0; s < lattice.n_sites(); ++s)
    if (!in_block[s]) rest.push_back(s);
  if (!rest.empty()) p.buffers.push_back(std::move(rest));
  p.validate();
  return p;
}

Partition build_partition(const LatticeSpec& lattice) {
  lattice.validate();
  const long long M = lattice.M;
  const long long R = lattice.R;
  // K = floor( M / (M^(3/5) + 2R) ): largest k with k M^(3/5) <= M - 2Rk,
  // i.e. k^5 M^3 <= (M - 2Rk)^5 in exact integers.
  long long K = 0;
  for (long long k = 1; 2 * R * k < M; ++k) {
    const unsigned __int128 lhs = ipow(k, 5) * ipow(M, 3);
    const unsigned __int128 rhs = ipow(M - 2 * R * k, 5);
    if (lhs <= rhs)
      K = k;
    else
      break;
  }
  if (K < 1) throw std::invalid_argument("partition: lattice too small (K = 0)");

  Partition p;
  p.lattice = lattice;
  p.K = K;
  p.slab_built = true;
  p.slab_width = static_cast<double>(M) / static_cast<double>(K) - 2.0 * static_cast<double>(R);

  // Last-axis windows in exact integer arithmetic:
  //   A_k: floor(M k / K) < n <= floor((M (k+1) - 2 R K) / K)
  //   C_k: the remainder up to floor(M (k+1) / K)
  std::vector<std::pair<long long, long long>> a_ranges, c_ranges;
  for (long long k = 0; k < K; ++k) {
    const long long a_lo = (M * k) / K + 1;
    const long long a_hi = (M * (k + 1) - 2 * R * K) / K;
    const long long c_hi = (M * (k + 1)) / K;
    a_ranges.emplace_back(a_lo, a_hi);
    c_ranges.emplace_back(a_hi + 1, c_hi);
  }
  const long long n = lattice.n_sites();
  p.blocks.assign(K, {});
  p.buffers.assign(K, {});
  for (long long s = 0; s < n; ++s) {
    const long long last = s % M + 1;
    for (long long k = 0; k < K; ++k) {
      if (last >= a_ranges[k].first && last <= a_ranges[k].second) {
        p.blocks[k].push_back(s);
        break;
      }
      if (last >= c_ranges[k].first && last <= c_ranges[k].second) {
        p.buffers[k].push_back(s);
        break;
      }
    }
  }
  p.validate();
  return p;
}

double buffer_truncation_rhs(double t, long long buffer_size, double h, long long beta_2r) {
  return static_cast<double>(buffer_size) * h * h * t * t *
         (1.0 + 3.0 * static_cast<double>(beta_2r)) / 2.0;
}

BoundReport buffer_truncation_report(double lhs, double t, long long buffer_size,
                                     const LatticeConstants& consts) {
  BoundReport r;
  r.name = "phi_buffer_truncation";
  r.param = t;
  r.lhs = lhs;
  r.rhs = buffer_truncation_rhs(t, buffer_size, consts.h, consts.beta_2r);
  return r;
}

double gaussian_window_rhs(double t, double sigma2) {
  return (17.0 * sigma2 / 36.0) * t * t * std::exp(-sigma2 * t * t / 36.0);
}

BoundReport gaussian_window_report(double lhs, double t, double sigma2,
                                   const std::vector<BlockMoments>& blocks, double sigma_A2,
                                   long long buffer_size, const Partition& partition,
                                   const LatticeConstants& consts) {
  BoundReport r;
  r.name = "phi_gaussian_window";
  r.param = t;
  r.lhs = lhs;
  r.rhs = gaussian_window_rhs(t, sigma2);
  const bool regime = 81.0 * consts.c2 * static_cast<double>(buffer_size) <= 4.0 * sigma2;
  r.preconditions.push_back({"81 c2 |C| <= 4 sigma^2", regime});
  double max_sn2 = 0.0;
  for (const auto& b : blocks) max_sn2 = std::max(max_sn2, b.sigma_n2);
  r.preconditions.push_back({"sigma_n^2 t^2 < 2 for every block", max_sn2 * t * t < 2.0});
  const double window = admissible_time_window(sigma2, partition.total_block_sites(),
                                               partition.max_block_size(), consts);
  r.preconditions.push_back(
      {"|t| <= x sigma^2 / (|A| max_n |A_n|^(1/2))", std::abs(t) <= window});
  (void)sigma_A2;
  return r;
}

BoundReport phi_average_report(double lhs, double T, double sigma2,
                               const Partition& partition, const LatticeConstants& consts) {
  if (!(T > 0.0)) throw std::domain_error("phi average report: T must be > 0");
  BoundReport r;
  r.name = "phi_time_average";
  r.param = T;
  r.lhs = lhs;
  const double sigma = std::sqrt(sigma2);
  const double cbuf = static_cast<double>(partition.buffer_size());
  r.rhs = consts.b0_lemma * (cbuf * T * T + 1.0 / (T * sigma));
  const double window = admissible_time_window(sigma2, partition.total_block_sites(),
                                               partition.max_block_size(), consts);
  const bool trivial = 81.0 * consts.c2 * cbuf >= 4.0 * sigma2;
  r.preconditions.push_back(
      {"T <= a0 sigma^2 / (|A| max_n |A_n|^(1/2)) or 81 c2 |C| >= 4 sigma^2",
       T <= window || trivial});
  return r;
}

std::vector<BoundReport> moment_bound_ledger(const LocalHamiltonianSpec& spec,
                                             const Partition& partition) {
  spec.validate();
  partition.validate();
  const LocalHamiltonianSpec centered = spec.centered();
  const LatticeConstants consts = lemma_constants(spec.lattice, centered.h);
  std::vector<BoundReport> out;

  double sigma_A2 = 0.0;
  bool all_blocks_ok = true;
  for (size_t k = 0; k < partition.blocks.size(); ++k) {
    BoundReport var_row, m4_row;
    var_row.name = "block_variance";
    m4_row.name = "block_fourth_moment";
    var_row.block = m4_row.block = static_cast<long long>(k);
    const double size = static_cast<double>(partition.blocks[k].size());
    var_row.rhs = consts.c2 * size;
    m4_row.rhs = consts.c4 * size * size;
    try {
      BlockMoments bm = block_moments(centered, partition.blocks[k], static_cast<int>(k));
      var_row.lhs = bm.sigma_n2;
      m4_row.lhs = bm.moment4;
      sigma_A2 += bm.sigma_n2;
    } catch (const CapacityError&) {
      all_blocks_ok = false;
      var_row.preconditions.push_back({"block moments within contraction capacity", false});
      m4_row.preconditions.push_back({"block moments within contraction capacity", false});
    }
    out.push_back(std::move(var_row));
    out.push_back(std::move(m4_row));
  }

  BoundReport deficit;
  deficit.name = "variance_buffer_deficit";
  deficit.rhs = 3.0 * consts.c2 * static_cast<double>(partition.buffer_size());
  if (all_blocks_ok) {
    const MomentReport mr = sigma2_local_contraction(spec);
    deficit.lhs = std::abs(mr.sigma2 - sigma_A2);
  } else {
    deficit.preconditions.push_back({"block moments within contraction capacity", false});
  }
  out.push_back(std::move(deficit));
  return out;
}

std::vector<BoundReport> appendix_ledger(const LocalHamiltonianSpec& spec,
                                         const Partition& partition,
                                         const LedgerOptions& options) {
  spec.validate();
  partition.validate();
  const LocalHamiltonianSpec centered = spec.centered();
  const LatticeConstants consts = lemma_constants(spec.lattice, centered.h);
  const MomentReport mr = sigma2_local_contraction(spec);
  const double sigma2 = mr.sigma2;

  std::vector<BoundReport> out = moment_bound_ledger(spec, partition);

  std::vector<BlockMoments> blocks;
  bool blocks_ok = true;
  double sigma_A2 = 0.0;
  try {
    for (size_t k = 0; k < partition.blocks.size(); ++k) {
      blocks.push_back(block_moments(centered, partition.blocks[k], static_cast<int>(k)));
      sigma_A2 += blocks.back().sigma_n2;
    }
  } catch (const CapacityError&) {
    blocks_ok = false;
  }

  const bool dense_ok = spec.total_dim() <= kMaxDenseDim;
  SpectrumTable full_spec, a_spec;
  if (dense_ok) {
    full_spec = exact_spectrum_local(centered);
    std::vector<long long> a_sites;
    for (const auto& b : partition.blocks) a_sites.insert(a_sites.end(), b.begin(), b.end());
    std::sort(a_sites.begin(), a_sites.end());
    a_spec = anchored_subset_spectrum(centered, a_sites);
  }

  auto not_dense = [&](BoundReport r) {
    r.preconditions.push_back({"dense spectrum within capacity", false});
    out.push_back(std::move(r));
  };

  // Truncation rows |phi - phi_A|.
  for (double t : options.t_values) {
    if (!dense_ok) {
      BoundReport r;
      r.name = "phi_buffer_truncation";
      r.param = t;
      r.rhs = buffer_truncation_rhs(t, partition.buffer_size(), consts.h, consts.beta_2r);
      not_dense(std::move(r));
      continue;
    }
    const double lhs = std::abs(phi_direct(full_spec, t) - phi_direct(a_spec, t));
    out.push_back(buffer_truncation_report(lhs, t, partition.buffer_size(), consts));
  }

  // Gaussian-window rows |phi_A - e^{-sigma^2 t^2 / 2}|, on the configured
  // grid plus points spread over the admissible window.
  const double window = admissible_time_window(sigma2, partition.total_block_sites(),
                                               partition.max_block_size(), consts);
  std::vector<double> window_ts = options.t_values;
  if (std::isfinite(window) && window > 0.0)
    for (int k = 1; k <= options.window_points; ++k)
      window_ts.push_back(window * static_cast<double>(k) /
                          static_cast<double>(options.window_points));
  for (double t : window_ts) {
    BoundReport r;
    if (!dense_ok || !blocks_ok) {
      r.name = "phi_gaussian_window";
      r.param = t;
      r.rhs = gaussian_window_rhs(t, sigma2);
      r.preconditions.push_back(
          {"dense spectrum and block moments within capacity", false});
      out.push_back(std::move(r));
      continue;
    }
    const double lhs =
        std::abs(phi_direct(a_spec, t) - std::exp(-sigma2 * t * t / 2.0));
    out.push_back(gaussian_window_report(lhs, t, sigma2, blocks, sigma_A2,
                                         partition.buffer_size(), partition, consts));
  }

  // Time-average rows.
  std::vector<double> Ts = options.T_values;
  if (Ts.empty() && std::isfinite(window) && window > 0.0) Ts = {0.5 * window, window};
  for (double T : Ts) {
    if (!(T > 0.0)) continue;
    if (!dense_ok) {
      BoundReport r;
      r.name = "phi_time_average";
      r.param = T;
      const double sigma = std::sqrt(sigma2);
      r.rhs = consts.b0_lemma *
              (static_cast<double>(partition.buffer_size()) * T * T + 1.0 / (T * sigma));
      not_dense(std::move(r));
      continue;
    }
    const double width = full_spec.max_energy() - full_spec.min_energy();
    const TimeGrid grid = TimeGrid::resolve(T, width);
    const double lhs = time_average(
        [&](double t) { return std::abs(phi_direct(full_spec, t)); }, T, grid.n_intervals);
    out.push_back(phi_average_report(lhs, T, sigma2, partition, consts));

    const double cbuf = static_cast<double>(partition.buffer_size());
    if (81.0 * consts.c2 * cbuf >= 4.0 * sigma2 && sigma2 > 0.0) {
      // Trivial-regime chain: 1 <= (81 c2 |C| / (4 sigma^2))^(1/3)
      //                        <= (3 c2)^(1/3) (|C| T^2 + 1/(T sigma)).
      BoundReport r;
      r.name = "phi_time_average_trivial_regime";
      r.param = T;
      r.lhs = 1.0;
      r.rhs = std::cbrt(3.0 * consts.c2) * (cbuf * T * T + 1.0 / (T * std::sqrt(sigma2)));
      r.preconditions.push_back({"81 c2 |C| >= 4 sigma^2", true});
      out.push_back(std::move(r));
    }
  }

  if (options.rhs_scale != 1.0)
    for (auto& r : out) r.rhs *= options.rhs_scale;
  return out;
}

}  // namespace randtherm
