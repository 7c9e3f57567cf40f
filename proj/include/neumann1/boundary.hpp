#pragma once

#include "neumann1/mesh.hpp"

namespace neumann1 {

struct BoundaryData {
  std::vector<double> values;  // f_b per boundary face
  double residual = 0.0;       // sum f_b p_b
  bool sup_norm_le_1 = true;

  double operator[](size_t b) const { return values[b]; }
};

// Default balance tolerance: 1e-12 * sum p_b.
double balance_tolerance(const MeshDomain& domain);

BoundaryData make_boundary_data(const MeshDomain& domain,
                                const std::vector<double>& values);
BoundaryData make_boundary_data(const MeshDomain& domain,
                                const BoundarySpec& spec);

// Returns the residual; throws if |residual| > tol.
double validate_balance(const MeshDomain& domain, const BoundaryData& bd,
                        double tol);

// Scales whichever signed part carries the larger absolute integral so the
// residual vanishes. Values never grow in magnitude. Throws on single-signed
// nonzero data.
BoundaryData rebalance(const MeshDomain& domain, const BoundaryData& bd);

double boundary_l1_distance(const MeshDomain& domain, const BoundaryData& f,
                            const BoundaryData& h);

}  // namespace neumann1
