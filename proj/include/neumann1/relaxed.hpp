#pragma once

#include "neumann1/mincut.hpp"

namespace neumann1 {

struct RelaxedOptions {
  int max_iter = 50000;
  double tol = 1e-8;        // fixed-point residual
  double step_ratio = 1.0;  // tau/sigma balance
  int check_every = 25;
};

struct RelaxedResult {
  CellField field;
  EnergyReport report;  // graph energy of the returned field
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Box-constrained primal-dual solve of min { |Du|_iso + <f, Tu> : -1<=u<=1 }
// with isotropic forward-difference TV on the lattice. Requires a grid-built
// domain.
RelaxedResult solve_relaxed(const MeshDomain& domain, const BoundaryData& bd,
                            const RelaxedOptions& opts = {});

// E1 = {field > t1}, E2 = {field < -t2}; energy evaluated with the domain's
// graph functional.
Solution threshold_levels(const MeshDomain& domain, const BoundaryData& bd,
                          const CellField& field, double t1, double t2);

}  // namespace neumann1
