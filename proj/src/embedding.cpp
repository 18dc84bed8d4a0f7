#include "randtherm/embedding.hpp"

#include <algorithm>
#include <set>

namespace randtherm {

namespace {

// Offset contribution of every sub-index of `sub_sites` within `space`.
std::vector<long long> sub_offsets(const std::vector<long long>& sub_sites,
                                   const SiteSpace& space) {
  std::vector<long long> strides(space.sites.size());
  long long acc = 1;
  for (int k = static_cast<int>(space.sites.size()) - 1; k >= 0; --k) {
    strides[k] = acc;
    acc *= space.dims[k];
  }
  long long sub_dim = 1;
  std::vector<long long> sub_strides;
  std::vector<long long> sub_dims;
  for (long long s : sub_sites) {
    auto it = std::lower_bound(space.sites.begin(), space.sites.end(), s);
    if (it == space.sites.end() || *it != s)
      throw std::invalid_argument("embedding: site not contained in target space");
    const long long k = it - space.sites.begin();
    sub_strides.push_back(strides[k]);
    sub_dims.push_back(space.dims[k]);
    sub_dim *= space.dims[k];
  }
  std::vector<long long> offsets(sub_dim, 0);
  long long repeat = sub_dim;
  for (size_t q = 0; q < sub_sites.size(); ++q) {
    repeat /= sub_dims[q];
    for (long long i = 0; i < sub_dim; ++i)
      offsets[i] += ((i / repeat) % sub_dims[q]) * sub_strides[q];
  }
  return offsets;
}

std::vector<long long> complement_offsets(const std::vector<long long>& sub_sites,
                                          const SiteSpace& space) {
  std::vector<long long> rest;
  for (long long s : space.sites)
    if (!std::binary_search(sub_sites.begin(), sub_sites.end(), s)) rest.push_back(s);
  return sub_offsets(rest, space);
}

}  // namespace

SiteSpace SiteSpace::from_sites(std::vector<long long> sites,
                                const std::vector<long long>& site_dims_by_site) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  SiteSpace sp;
  sp.sites = std::move(sites);
  sp.dims.reserve(sp.sites.size());
  for (long long s : sp.sites) {
    sp.dims.push_back(site_dims_by_site.at(s));
    sp.dim *= site_dims_by_site.at(s);
    if (sp.dim > kMaxContractionDim)
      throw CapacityError("contraction space exceeds dimension " +
                          std::to_string(kMaxContractionDim));
  }
  return sp;
}

SiteSpace union_space(const std::vector<const LocalTerm*>& terms,
                      const std::vector<long long>& site_dims_by_site) {
  std::vector<long long> sites;
  for (const auto* t : terms)
    sites.insert(sites.end(), t->support.begin(), t->support.end());
  return SiteSpace::from_sites(std::move(sites), site_dims_by_site);
}

MatrixXcd embed(const MatrixXcd& op, const std::vector<long long>& op_sites,
                const SiteSpace& space) {
  const std::vector<long long> sOff = sub_offsets(op_sites, space);
  const std::vector<long long> rOff = complement_offsets(op_sites, space);
  const long long ds = static_cast<long long>(sOff.size());
  MatrixXcd out = MatrixXcd::Zero(space.dim, space.dim);
  for (long long r : rOff)
    for (long long i = 0; i < ds; ++i)
      for (long long j = 0; j < ds; ++j) out(sOff[i] + r, sOff[j] + r) = op(i, j);
  return out;
}

void apply_local_right(MatrixXcd& acc, const MatrixXcd& op,
                       const std::vector<long long>& op_sites, const SiteSpace& space) {
  const std::vector<long long> sOff = sub_offsets(op_sites, space);
  const std::vector<long long> rOff = complement_offsets(op_sites, space);
  const long long ds = static_cast<long long>(sOff.size());
  MatrixXcd block(space.dim, ds);
  for (long long r : rOff) {
    for (long long j = 0; j < ds; ++j) block.col(j) = acc.col(sOff[j] + r);
    for (long long j = 0; j < ds; ++j) acc.col(sOff[j] + r).noalias() = block * op.col(j);
  }
}

Complex trace_with_local(const MatrixXcd& acc, const MatrixXcd& op,
                         const std::vector<long long>& op_sites, const SiteSpace& space) {
  const std::vector<long long> sOff = sub_offsets(op_sites, space);
  const std::vector<long long> rOff = complement_offsets(op_sites, space);
  const long long ds = static_cast<long long>(sOff.size());
  Complex acc_tr = 0.0;
  for (long long r : rOff)
    for (long long i = 0; i < ds; ++i)
      for (long long j = 0; j < ds; ++j) acc_tr += acc(sOff[i] + r, sOff[j] + r) * op(j, i);
  return acc_tr;
}

Complex normalized_trace_product(const std::vector<const LocalTerm*>& ordered_terms,
                                 const std::vector<long long>& site_dims_by_site) {
  if (ordered_terms.empty()) return 1.0;
  SiteSpace space = union_space(ordered_terms, site_dims_by_site);
  if (ordered_terms.size() == 1) {
    const auto* t = ordered_terms.front();
    return t->matrix.trace() / static_cast<double>(space.dim);
  }
  MatrixXcd acc = embed(ordered_terms.front()->matrix, ordered_terms.front()->support, space);
  for (size_t k = 1; k + 1 < ordered_terms.size(); ++k)
    apply_local_right(acc, ordered_terms[k]->matrix, ordered_terms[k]->support, space);
  const auto* last = ordered_terms.back();
  Complex tr = trace_with_local(acc, last->matrix, last->support, space);
  return tr / static_cast<double>(space.dim);
}

MatrixXcd assemble_on(const std::vector<const LocalTerm*>& terms, const SiteSpace& space) {
  MatrixXcd out = MatrixXcd::Zero(space.dim, space.dim);
  for (const auto* t : terms) out += embed(t->matrix, t->support, space);
  return out;
}

}  // namespace randtherm
