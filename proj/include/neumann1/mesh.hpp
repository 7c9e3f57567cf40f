#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace neumann1 {

enum class Stencil { N4, N8, N16 };

Stencil stencil_from_string(const std::string& s);
std::string to_string(Stencil s);

struct Cell {
  double mu = 0.0;  // cell measure, > 0
  double x = 0.0;
  double y = 0.0;
};

struct InteriorFace {
  int a = -1;
  int b = -1;
  double w = 0.0;  // discrete perimeter contribution, > 0
};

struct BoundaryFace {
  int cell = -1;   // owner cell
  double p = 0.0;  // boundary measure mass, > 0
  double x = 0.0;  // position (midpoint) where geometry exists
  double y = 0.0;
  double s = 0.0;  // arc parameter along the continuum boundary
};

// Lattice metadata kept by the grid builders; needed by the relaxed solver
// (isotropic stencil) and by mask image output.
struct GridInfo {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 0.0;
  double hy = 0.0;
  std::vector<int> ix;  // lattice coordinates per cell
  std::vector<int> iy;
  // cell id at (i,j), -1 where masked out
  std::vector<int> at;
  int cell_at(int i, int j) const {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
    return at[static_cast<size_t>(j) * nx + i];
  }
};

struct MeshDomain {
  std::vector<Cell> cells;
  std::vector<InteriorFace> faces;
  std::vector<BoundaryFace> boundary;
  Stencil stencil = Stencil::N4;
  double spacing = 0.0;  // mesh spacing h; 0 for abstract graphs
  std::string descriptor;
  std::optional<GridInfo> grid;

  int cell_count() const { return static_cast<int>(cells.size()); }
  int boundary_count() const { return static_cast<int>(boundary.size()); }
  double total_measure() const;
  double boundary_measure() const;  // sum of p_b, the discrete P(Omega, X)
  bool is_grid() const { return grid.has_value(); }

  // Checks all structural invariants (positive measures/weights, no duplicate
  // faces, owners in range, connected adjacency graph). Throws on violation.
  void validate() const;
  bool connected() const;
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

using WeightFn = std::function<double(double, double)>;

MeshDomain build_grid_rectangle(int nx, int ny, const Rect& extent,
                                const WeightFn& weight, Stencil stencil,
                                int boundary_segments);

MeshDomain build_disk(int n, double radius, const WeightFn& weight,
                      Stencil stencil, int boundary_segments);

// Graph JSON: {"cells":[{"id","mu"}], "faces":[{"a","b","w"}],
//              "boundary":[{"cell","p","pos"}]}
MeshDomain load_graph(const std::string& path);
MeshDomain parse_graph_json(const std::string& text);
std::string graph_to_json(const MeshDomain& domain);
void save_graph(const MeshDomain& domain, const std::string& path);

// Piecewise boundary data descriptor. Arc pieces use angles (radians, measured
// counterclockwise, wrapped to [0, 2pi)); side pieces use a side name and a
// coordinate interval along that side.
struct BoundaryPiece {
  enum class Kind { Arc, Side };
  Kind kind = Kind::Arc;
  double from = 0.0;
  double to = 0.0;
  std::string side;  // "bottom" | "right" | "top" | "left"
  double value = 0.0;
};

struct BoundarySpec {
  std::vector<BoundaryPiece> pieces;
};

}  // namespace neumann1
