#pragma once

#include <vector>

#include "randtherm/common.hpp"
#include "randtherm/model.hpp"

namespace randtherm {

// A sorted list of lattice sites together with their local dimensions;
// basis ordering is row-major in the listed site order.
struct SiteSpace {
  std::vector<long long> sites;
  std::vector<long long> dims;
  long long dim = 1;

  static SiteSpace from_sites(std::vector<long long> sites,
                              const std::vector<long long>& site_dims_by_site);
};

SiteSpace union_space(const std::vector<const LocalTerm*>& terms,
                      const std::vector<long long>& site_dims_by_site);

// op given on op_sites (sorted subset of space.sites), padded with identity
// on the remaining factors of `space`.
MatrixXcd embed(const MatrixXcd& op, const std::vector<long long>& op_sites,
                const SiteSpace& space);

// acc <- acc * (op (x) identity). Costs dim(space)^2 * dim(op) instead of a
// dense product.
void apply_local_right(MatrixXcd& acc, const MatrixXcd& op,
                       const std::vector<long long>& op_sites, const SiteSpace& space);

// tr(acc * (op (x) identity)) without forming the product.
Complex trace_with_local(const MatrixXcd& acc, const MatrixXcd& op,
                         const std::vector<long long>& op_sites, const SiteSpace& space);

// Normalized trace <h_1 h_2 ... h_k> = tr(product) / d, evaluated on the
// union of the factors' supports (the uniform trace factorizes over sites).
// Throws CapacityError when the union dimension exceeds kMaxContractionDim.
Complex normalized_trace_product(const std::vector<const LocalTerm*>& ordered_terms,
                                 const std::vector<long long>& site_dims_by_site);

// Dense sum of the given terms on `space` (terms must be supported inside it).
MatrixXcd assemble_on(const std::vector<const LocalTerm*>& terms, const SiteSpace& space);

}  // namespace randtherm
