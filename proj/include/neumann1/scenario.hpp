#pragma once

#include "neumann1/analysis.hpp"
#include "neumann1/dualnorm.hpp"
#include "neumann1/relaxed.hpp"

#include <map>

namespace neumann1 {

struct WeightSpec {
  std::string kind = "constant";  // constant | strip
  double value = 1.0;
  // strip: low weight inside [-half_width, half_width] x [-half_height, half_height]
  double inside = 0.5;
  double outside = 1.0;
  double half_width = 0.1;
  double half_height = 0.9;

  WeightFn function() const;
};

struct DomainSpec {
  std::string kind = "rectangle";  // rectangle | disk | graph
  int nx = 64, ny = 64;            // rectangle
  Rect extent{0.0, 0.0, 1.0, 1.0};
  int n = 64;  // disk cells across the diameter
  double radius = 1.0;
  Stencil stencil = Stencil::N4;
  int boundary_segments = 0;  // 0 -> builder default
  std::string graph_path;
  WeightSpec weight;

  MeshDomain build() const;
};

struct ExpectedValue {
  double value = 0.0;
  double tol = 0.0;
};

struct DirichletSpec {
  // boundary-collar constraints by arc angle (disk) or side interval (square)
  std::vector<BoundaryPiece> fixed_in;
  std::vector<BoundaryPiece> fixed_out;
};

struct Scenario {
  std::string name;
  DomainSpec domain;
  BoundarySpec boundary;
  bool rebalance = true;
  std::string mode = "mincut";  // mincut | relaxed | both | lambda | dirichlet | stability
  RelaxedOptions relaxed;
  double threshold_t1 = 0.5, threshold_t2 = 0.5;
  ConstrainedTvOptions lambda_opts;
  std::vector<BoundarySpec> stability_steps;
  BoundarySpec stability_limit;
  DirichletSpec dirichlet;
  std::map<std::string, ExpectedValue> expected;
};

Scenario parse_scenario(const std::string& toml_text);
Scenario load_scenario(const std::string& path_or_name);

const std::vector<std::string>& builtin_scenario_names();
std::string builtin_scenario_text(const std::string& name);

struct RunOptions {
  std::string out_dir;  // empty: no files written
  uint64_t seed = 1;
  double tol_override = -1.0;  // <0: use scenario tolerances
  bool write_masks = true;
  bool write_field = true;
};

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 1 error, 2 expected-value mismatch
  std::string report_json;
  std::vector<std::string> failures;
};

RunOutcome run_scenario(const Scenario& sc, const RunOptions& opts);

// Row-major mask over the bounding grid, one byte per cell: member 255,
// non-member 0, masked-out 128. Top row first.
std::string render_pgm(const MeshDomain& domain, const CellSet& e);

std::string mesh_info_json(const MeshDomain& domain);

}  // namespace neumann1
