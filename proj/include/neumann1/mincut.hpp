#pragma once

#include "neumann1/energy.hpp"

#include <cstdint>

namespace neumann1 {

// Integer capacity plan shared by the max-flow solver and the brute-force
// oracle, so both optimize the exact same quantized instance. The signed
// quantized boundary masses are rebalanced to sum to zero exactly (spread over
// the largest capacities), which makes complement symmetry and family duality
// exact in integer arithmetic.
struct QuantizedProblem {
  double scale = 0.0;             // quanta per energy unit
  double resolution = 0.0;        // reported energy resolution, total_cap/2^48
  double slack = 0.0;             // rounding slack bound for one cut value
  std::vector<int64_t> face_cap;  // per interior face
  std::vector<int64_t> bnd_cap;   // per boundary face: quantized sign*f_b*p_b
  int64_t negative_mass = 0;      // sum of -min(bnd_cap, 0); cut offset
  int sign = +1;

  // Quantized I(sign * chi_E); exact integer arithmetic.
  int64_t set_energy(const MeshDomain& domain, const CellSet& e) const;
  double to_energy(int64_t q) const { return static_cast<double>(q) / scale; }
};

QuantizedProblem quantize_problem(const MeshDomain& domain,
                                  const BoundaryData& bd, int sign);

struct FlowStats {
  int64_t augmentations = 0;
  double seconds = 0.0;
};

struct SetProblemResult {
  double min_energy = 0.0;
  int64_t min_energy_q = 0;
  CellSet minimal_set;
  CellSet maximal_set;
  QuantizedProblem quant;
  FlowStats stats;
};

// Exactly minimizes I(sign * chi_E) over cell sets via min cut on the
// quantized capacities; extracts the minimal and maximal optimal sets from the
// residual network.
SetProblemResult solve_set_problem(const MeshDomain& domain,
                                   const BoundaryData& bd, int sign);

struct Solution {
  enum class Kind { Minimal, Maximal, Plain };
  CellSet e1;
  CellSet e2;
  EnergyReport report;
  Kind kind = Kind::Plain;
};

struct RestrictedSolutions {
  Solution minimal;
  Solution maximal;
  double min_total = 0.0;
  double quant_slack = 0.0;
  SetProblemResult positive;  // the I(chi_E) family
  SetProblemResult negative;  // the I(-chi_E) family
};

// Solves the restricted problem: E1 family from sign=+1, E2 family from
// sign=-1. The minimal solution pair is asserted disjoint; the maximal pair
// reports the two per-sign maximal optimal sets, which may overlap when the
// solution is not unique (its energy is the sum of the two set minima, which
// equals the problem minimum).
RestrictedSolutions solve_restricted(const MeshDomain& domain,
                                     const BoundaryData& bd);

// Minimal perimeter over sets with fixed_in ⊆ E and E ∩ fixed_out = ∅,
// via terminal arcs that no finite cut can pay for.
SetProblemResult solve_dirichlet_least_gradient(const MeshDomain& domain,
                                                const CellSet& fixed_in,
                                                const CellSet& fixed_out);

}  // namespace neumann1
