#pragma once

#include "neumann1/mincut.hpp"

#include <optional>
#include <random>

namespace neumann1 {

struct BruteForceResult {
  int64_t min_energy_q = 0;
  double min_energy = 0.0;
  std::vector<CellSet> optimal_sets;  // every optimal set, enumeration order
  QuantizedProblem quant;
};

// Exhaustive minimization of I(sign * chi_E); exact under the same quantized
// capacities as the min-cut solver. Requires <= 20 cells.
BruteForceResult brute_force_min(const MeshDomain& domain,
                                 const BoundaryData& bd, int sign);

struct LatticeVerdict {
  bool ok = false;
  int64_t inter_q = 0;
  int64_t union_q = 0;
  int64_t opt_q = 0;
};
// Asserts that S∩S' and S∪S' are optimal whenever S, S' are.
LatticeVerdict check_lattice(const MeshDomain& domain, const BoundaryData& bd,
                             int sign, const CellSet& s, const CellSet& sp);

enum class LeastGradientMode { Exhaustive, Random };
struct LeastGradientVerdict {
  bool ok = false;
  double perimeter_e = 0.0;
  double best_competitor = 0.0;
  std::optional<CellSet> witness;  // strictly better competitor if any
};
// Verifies perimeter(E) <= perimeter(F) for F differing from E only on
// interior cells (cells owning no boundary face). Exhaustive mode requires
// <= 16 interior cells.
LeastGradientVerdict check_least_gradient(const MeshDomain& domain,
                                          const CellSet& e,
                                          LeastGradientMode mode,
                                          int random_trials = 200,
                                          uint64_t seed = 1);

struct BoundaryAgreementReport {
  TraceBoundaryMeasures measures;
  double inequality_slack = 0.0;  // rhs - lhs of the E1-vs-f inequality
  bool inequality_ok = false;
  double ratio = 0.0;  // measure on {f=1} / measure on {f=-1}
};
BoundaryAgreementReport boundary_agreement_report(const MeshDomain& domain,
                                                  const BoundaryData& bd,
                                                  const CellSet& e1,
                                                  double quant_slack = 0.0);

// Positive-mean-curvature style check on disks: every boundary face with
// f < 0 at arc distance > margin from the nearest face with f >= 0 must have
// its owner cell in E1. Returns the ids of violating faces.
std::vector<int> boundary_data_agreement_violations(const MeshDomain& domain,
                                                    const BoundaryData& bd,
                                                    const CellSet& e1,
                                                    double margin);

struct StabilityOptions {
  double tail_decay_warn = true;
};

struct StabilityStep {
  BoundaryData data;
  Solution minimal;
  double energy = 0.0;  // I_{f_k} of the minimal solution function
  double quant_slack = 0.0;
};

struct StabilityRun {
  std::vector<StabilityStep> steps;
  std::vector<double> consecutive_data_distance;  // ||f_k - f_{k+1}||
  std::vector<double> consecutive_sym_diff;       // mu(E1^k △ E1^{k+1})
  CellSet e_plus;
  bool pairwise_bound_ok = false;   // |I_k - I_m| <= ||f_k - f_m|| + slack
  double pairwise_worst = 0.0;      // most negative margin observed
  bool chain_bound_ok = false;      // 0 <= I_N(∪E) - I_N(E_N) <= 2 sum ||Δf||
  double chain_lhs = 0.0;
  double chain_rhs = 0.0;
  double chain_mid = 0.0;
  double e_plus_energy = 0.0;       // I_{f_limit}(chi_E+ - chi_complement)
  double limit_min_energy = 0.0;
  bool e_plus_optimal = false;
  Solution limit_minimal;
  std::vector<std::string> warnings;
};

StabilityRun stability_run(const MeshDomain& domain,
                           const std::vector<BoundarySpec>& specs,
                           const BoundarySpec& limit_spec,
                           double e_plus_tol = 1e-2);

// Connected random weighted graph with balanced data in [-1, 1].
std::pair<MeshDomain, BoundaryData> random_instance(uint64_t seed, int n_cells,
                                                    double density);

CellField random_field(std::mt19937_64& rng, int n, double lo = -1.0,
                       double hi = 1.0);
CellSet random_set(std::mt19937_64& rng, int n);

}  // namespace neumann1
