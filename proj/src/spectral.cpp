#include "randtherm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace randtherm {

Complex phi_direct(const SpectrumTable& spectrum, double t) {
  spectrum.validate();
  double re = 0.0, im = 0.0;
  for (double e : spectrum.energies) {
    re += std::cos(t * e);
    im += std::sin(t * e);
  }
  const double d = static_cast<double>(spectrum.dim());
  return Complex(re / d, im / d);
}

double phi_solvable_abs(const SolvableSpectrumSpec& spec, double t) {
  double p = 1.0;
  for (double e : spec.epsilons) p *= std::abs(std::cos(0.5 * e * t));
  return p;
}

MomentReport sigma2_from_spectrum(const SpectrumTable& spectrum) {
  spectrum.validate();
  const double d = static_cast<double>(spectrum.dim());
  double mean = 0.0;
  for (double e : spectrum.energies) mean += e;
  mean /= d;
  double var = 0.0;
  for (double e : spectrum.energies) var += sqr(e - mean);
  var /= d;
  MomentReport r;
  r.sigma2 = var;
  r.mean_energy = mean;
  r.n_sites = spectrum.n_sites.value_or(1);
  r.sigma_bar2 = var / static_cast<double>(r.n_sites);
  return r;
}

namespace {

// All sites within l1 distance r of `site` (open boundaries).
std::vector<long long> sites_within(const LatticeSpec& lattice, long long site, long long r) {
  const auto c = lattice.coords(site);
  std::vector<long long> out;
  std::vector<long long> cur(lattice.D);
  std::function<void(int, long long)> rec = [&](int axis, long long budget) {
    if (axis == lattice.D) {
      out.push_back(lattice.site_index(cur));
      return;
    }
    for (long long off = -budget; off <= budget; ++off) {
      const long long x = c[axis] + off;
      if (x < 1 || x > lattice.M) continue;
      cur[axis] = x;
      rec(axis + 1, budget - std::abs(off));
    }
  };
  rec(0, r);
  std::sort(out.begin(), out.end());
  return out;
}

bool sorted_intersects(const std::vector<long long>& a, const std::vector<long long>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<long long> sorted_union(const std::vector<long long>& a,
                                    const std::vector<long long>& b) {
  std::vector<long long> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

struct TermIndex {
  const LocalHamiltonianSpec* spec;
  std::multimap<long long, int> by_anchor;

  explicit TermIndex(const LocalHamiltonianSpec& s) : spec(&s) {
    for (int i = 0; i < static_cast<int>(s.terms.size()); ++i)
      by_anchor.emplace(s.terms[i].anchor, i);
  }

  std::vector<int> terms_near(long long site, long long r) const {
    std::vector<int> out;
    for (long long s : sites_within(spec->lattice, site, r)) {
      auto [lo, hi] = by_anchor.equal_range(s);
      for (auto it = lo; it != hi; ++it) out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

double pair_contraction(const LocalHamiltonianSpec& spec, int i, int j) {
  const Complex v = normalized_trace_product({&spec.terms[i], &spec.terms[j]}, spec.site_dims);
  return v.real();  // tr(AB) is real for Hermitian A, B
}

// Connectivity of the position-overlap graph on exactly four nodes.
bool quad_connected(const bool adj[4][4]) {
  int reach = 1;  // bitmask of nodes reached from node 0
  for (int pass = 0; pass < 4; ++pass)
    for (int u = 0; u < 4; ++u)
      if (reach & (1 << u))
        for (int v = 0; v < 4; ++v)
          if (adj[u][v]) reach |= 1 << v;
  return reach == 0xF;
}

}  // namespace

SpectrumTable exact_spectrum_local(const LocalHamiltonianSpec& spec) {
  spec.validate();
  const long long d = spec.total_dim();
  if (d > kMaxDenseDim)
    throw CapacityError("exact diagonalization limited to dimension " +
                        std::to_string(kMaxDenseDim));
  SpectrumTable out;
  out.provenance = SpectrumProvenance::Diagonalized;
  out.n_sites = static_cast<int>(spec.lattice.n_sites());

  std::vector<const LocalTerm*> all;
  for (const auto& t : spec.terms) all.push_back(&t);
  if (all.empty()) {
    out.energies.assign(d, 0.0);
    return out;
  }
  SiteSpace space = union_space(all, spec.site_dims);
  MatrixXcd hm = assemble_on(all, space);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hm, Eigen::EigenvaluesOnly);
  const long long mult = d / space.dim;
  out.energies.reserve(d);
  for (long long k = 0; k < space.dim; ++k)
    for (long long m = 0; m < mult; ++m) out.energies.push_back(es.eigenvalues()(k));
  std::sort(out.energies.begin(), out.energies.end());
  return out;
}

SpectrumTable anchored_subset_spectrum(const LocalHamiltonianSpec& spec,
                                       const std::vector<long long>& anchors) {
  std::vector<const LocalTerm*> sel;
  for (const auto& t : spec.terms)
    if (std::binary_search(anchors.begin(), anchors.end(), t.anchor)) sel.push_back(&t);
  SpectrumTable out;
  out.provenance = SpectrumProvenance::Diagonalized;
  out.n_sites = static_cast<int>(spec.lattice.n_sites());
  if (sel.empty()) {
    out.energies.assign(1, 0.0);
    return out;
  }
  SiteSpace space = union_space(sel, spec.site_dims);
  if (space.dim > kMaxDenseDim)
    throw CapacityError("subset diagonalization limited to dimension " +
                        std::to_string(kMaxDenseDim));
  MatrixXcd hm = assemble_on(sel, space);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hm, Eigen::EigenvaluesOnly);
  out.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + space.dim);
  std::sort(out.energies.begin(), out.energies.end());
  return out;
}

MomentReport sigma2_local_contraction(const LocalHamiltonianSpec& spec) {
  spec.validate();
  double mean = 0.0;
  for (const auto& t : spec.terms)
    mean += (t.matrix.trace() / static_cast<double>(t.matrix.rows())).real();

  const LocalHamiltonianSpec cs = spec.centered();
  TermIndex index(cs);
  double s2 = 0.0;
  for (int i = 0; i < static_cast<int>(cs.terms.size()); ++i) {
    for (int j : index.terms_near(cs.terms[i].anchor, 2 * cs.lattice.R)) {
      if (j < i) continue;  // count unordered pair once, double off-diagonal
      if (!sorted_intersects(cs.terms[i].support, cs.terms[j].support)) continue;
      const double c = pair_contraction(cs, i, j);
      s2 += (j == i) ? c : 2.0 * c;
    }
  }
  MomentReport r;
  r.sigma2 = s2;
  r.mean_energy = mean;
  r.n_sites = cs.lattice.n_sites();
  r.sigma_bar2 = s2 / static_cast<double>(r.n_sites);
  return r;
}

BlockMoments block_moments(const LocalHamiltonianSpec& centered_spec,
                           const std::vector<long long>& block, int block_index) {
  const LocalHamiltonianSpec& cs = centered_spec;
  std::vector<long long> anchors = block;
  std::sort(anchors.begin(), anchors.end());

  std::vector<int> terms;  // indices of terms anchored in the block
  for (int i = 0; i < static_cast<int>(cs.terms.size()); ++i)
    if (std::binary_search(anchors.begin(), anchors.end(), cs.terms[i].anchor))
      terms.push_back(i);

  BlockMoments bm;
  bm.block_index = block_index;
  bm.block_size = static_cast<long long>(block.size());
  if (terms.empty()) return bm;

  const int nt = static_cast<int>(terms.size());
  std::vector<std::vector<bool>> overlap(nt, std::vector<bool>(nt, false));
  for (int a = 0; a < nt; ++a)
    for (int b = a; b < nt; ++b) {
      const bool o =
          sorted_intersects(cs.terms[terms[a]].support, cs.terms[terms[b]].support);
      overlap[a][b] = overlap[b][a] = o;
    }

  // Pair contractions; <h_i h_j> vanishes exactly for disjoint supports.
  std::vector<std::vector<double>> pairc(nt, std::vector<double>(nt, 0.0));
  for (int a = 0; a < nt; ++a)
    for (int b = a; b < nt; ++b)
      if (overlap[a][b]) {
        const double c = pair_contraction(cs, terms[a], terms[b]);
        pairc[a][b] = pairc[b][a] = c;
      }

  double s2 = 0.0;
  for (int a = 0; a < nt; ++a)
    for (int b = 0; b < nt; ++b) s2 += pairc[a][b];
  bm.sigma_n2 = s2;

  // Ordered pairs whose two supports overlap, with their cluster support.
  struct Pair {
    int a, b;
    double c;
    std::vector<long long> cluster;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < nt; ++a)
    for (int b = 0; b < nt; ++b)
      if (overlap[a][b])
        pairs.push_back({a, b, pairc[a][b],
                         sorted_union(cs.terms[terms[a]].support, cs.terms[terms[b]].support)});

  // Quadruples splitting into two support-disjoint overlapping pairs: the
  // trace factorizes into the two pair contractions; 3 ways to choose the
  // positions of the first pair.
  double sum_pairs = 0.0;
  for (const auto& p : pairs) sum_pairs += p.c;
  double sum_touching = 0.0;
  for (const auto& p : pairs)
    for (const auto& q : pairs)
      if (sorted_intersects(p.cluster, q.cluster)) sum_touching += p.c * q.c;
  const double split22 = 3.0 * (sum_pairs * sum_pairs - sum_touching);

  // Connected quadruples, contracted on the union of the four supports.
  // Cyclic rotations share a trace, so only the minimal rotation of each
  // orbit is contracted.
  std::vector<std::vector<int>> near6(nt);
  TermIndex index(cs);
  {
    std::vector<int> local(cs.terms.size(), -1);
    for (int a = 0; a < nt; ++a) local[terms[a]] = a;
    for (int a = 0; a < nt; ++a)
      for (int gi : index.terms_near(cs.terms[terms[a]].anchor, 6 * cs.lattice.R))
        if (local[gi] >= 0) near6[a].push_back(local[gi]);
  }
  long long work = 0;
  for (int a = 0; a < nt; ++a)
    work += static_cast<long long>(near6[a].size()) * near6[a].size() * near6[a].size();
  if (work > 20'000'000)
    throw CapacityError("block fourth moment: cluster enumeration too large");

  Complex connected = 0.0;
  int tup[4];
  for (int a = 0; a < nt; ++a) {
    tup[0] = a;
    for (int b : near6[a]) {
      tup[1] = b;
      for (int cq : near6[a]) {
        tup[2] = cq;
        for (int dq : near6[a]) {
          tup[3] = dq;
          // minimal-rotation representative check
          int period = 4;
          bool minimal = true;
          for (int r = 1; r < 4 && minimal; ++r) {
            int cmp = 0;
            for (int k = 0; k < 4; ++k) {
              const int x = tup[(k + r) % 4], y = tup[k];
              if (x != y) {
                cmp = x < y ? -1 : 1;
                break;
              }
            }
            if (cmp < 0) minimal = false;
            if (cmp == 0) period = std::min(period, r);
          }
          if (!minimal) continue;
          bool adj[4][4];
          for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) adj[u][v] = overlap[tup[u]][tup[v]];
          if (!quad_connected(adj)) continue;
          const Complex v = normalized_trace_product(
              {&cs.terms[terms[tup[0]]], &cs.terms[terms[tup[1]]],
               &cs.terms[terms[tup[2]]], &cs.terms[terms[tup[3]]]},
              cs.site_dims);
          connected += static_cast<double>(period) * v;  // orbit size = period
        }
      }
    }
  }
  bm.moment4 = split22 + connected.real();
  return bm;
}

}  // namespace randtherm
