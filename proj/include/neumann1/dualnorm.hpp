#pragma once

#include "neumann1/mincut.hpp"

namespace neumann1 {

struct ConstrainedTvOptions {
  int max_iter = 30000;
  double tol = 1e-9;  // fixed-point residual
  int check_every = 25;
};

struct LambdaReport {
  double lambda = 0.0;
  CellField minimizer;
  double mean_residual = 0.0;     // |sum u mu|
  double pairing_residual = 0.0;  // |sum Tu g p - 1|
  int iterations = 0;
  bool converged = false;
};

// lambda(g) = inf { TV(u) : sum u mu = 0, sum Tu g p = 1 }, computed by
// primal-dual iteration with exact affine projection onto the two constraint
// hyperplanes each step. Data are normalized by ||g||_inf internally and the
// result rescaled, so the scaling law lambda(tau g) = lambda(g)/tau holds to
// machine precision.
LambdaReport compute_lambda(const MeshDomain& domain, const BoundaryData& g,
                            const ConstrainedTvOptions& opts = {});

struct UnrestrictedVerdict {
  double lambda = 0.0;
  double min_set_energy = 0.0;  // min over sets of I_{-g}
  std::string classification;   // "zero-is-minimal" | "unbounded-below"
};
UnrestrictedVerdict check_unrestricted(const MeshDomain& domain,
                                       const BoundaryData& g,
                                       const ConstrainedTvOptions& opts = {});

struct DualNormReport {
  double star_norm = 0.0;
  CellField witness;
  double mean_residual = 0.0;
  double pairing_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// ||f||_* = sup { <f, Tw> / TV(w) : sum Tw p = 0 } = 1 / inf { TV(w) :
// sum Tw p = 0, sum Tw f p = 1 }.
DualNormReport compute_star_norm(const MeshDomain& domain,
                                 const BoundaryData& f,
                                 const ConstrainedTvOptions& opts = {});

}  // namespace neumann1
