#include "neumann1/mesh.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace neumann1 {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Dir {
  int dx, dy;
  double c;  // dimensionless family weight
};

// Family weights calibrated so the cut density is exact for straight cuts
// along every stencil direction (unit density, isotropic up to the gaps
// between stencil angles).
std::vector<Dir> stencil_dirs(Stencil s) {
  const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
  switch (s) {
    case Stencil::N4:
      return {{1, 0, 1.0}, {0, 1, 1.0}};
    case Stencil::N8: {
      const double ax = s2 - 1.0, di = 1.0 - 1.0 / s2;
      return {{1, 0, ax}, {0, 1, ax}, {1, 1, di}, {1, -1, di}};
    }
    case Stencil::N16: {
      const double ax = s5 - 2.0;
      const double di = s5 - 3.0 / s2;
      const double kn = 1.0 / s2 - (s5 - 1.0) / 2.0;
      return {{1, 0, ax}, {0, 1, ax}, {1, 1, di}, {1, -1, di},
              {2, 1, kn}, {1, 2, kn}, {2, -1, kn}, {1, -2, kn}};
    }
  }
  throw std::logic_error("unknown stencil");
}

int sgn(int v) { return (v > 0) - (v < 0); }

// Unit-step decomposition of a signed direction; empty for axis directions.
std::vector<std::pair<int, int>> decompose(int ux, int uy) {
  const int sx = sgn(ux), sy = sgn(uy);
  const int ax = std::abs(ux), ay = std::abs(uy);
  if (ax == 2 && ay == 1) return {{sx, sy}, {sx, 0}};
  if (ax == 1 && ay == 2) return {{sx, sy}, {0, sy}};
  if (ax == 1 && ay == 1) return {{sx, 0}, {0, sy}};
  return {};
}

std::vector<std::pair<int, int>> fallback_chain(int ux, int uy) {
  const int sx = sgn(ux), sy = sgn(uy);
  if (std::abs(ux) == 1 && uy == 0)
    return {{sx, 1}, {sx, -1}, {0, 1}, {0, -1}};
  if (ux == 0 && std::abs(uy) == 1)
    return {{1, sy}, {-1, sy}, {1, 0}, {-1, 0}};
  if (std::abs(ux) == 1 && std::abs(uy) == 1) return {{sx, 0}, {0, sy}};
  return {};
}

// Fraction of the segment from (x0,y0) along (dx,dy) that stays inside the
// continuum domain descriptor. Used to weigh transferred boundary detectors.
using InsideFractionFn = std::function<double(double, double, double, double)>;

struct EdgeAccumulator {
  std::map<std::pair<int, int>, double> w;
  void add(int a, int b, double weight) {
    if (a > b) std::swap(a, b);
    w[{a, b}] += weight;
  }
};

void build_lattice_faces(MeshDomain& dom, const WeightFn& weight,
                         const InsideFractionFn& inside_fraction) {
  const GridInfo& g = *dom.grid;
  const double h = g.hx;
  const auto dirs = stencil_dirs(dom.stencil);
  EdgeAccumulator acc;

  auto midpoint_weight = [&](int a, int b) {
    const double mx = 0.5 * (dom.cells[a].x + dom.cells[b].x);
    const double my = 0.5 * (dom.cells[a].y + dom.cells[b].y);
    return weight(mx, my);
  };

  for (int id = 0; id < dom.cell_count(); ++id) {
    const int i = g.ix[id], j = g.iy[id];
    for (const Dir& d : dirs) {
      const int nb = g.cell_at(i + d.dx, j + d.dy);
      if (nb >= 0) acc.add(id, nb, d.c * h * midpoint_weight(id, nb));
    }
    if (dom.stencil == Stencil::N4) continue;
    // Boundary compensation: a detector with its far endpoint outside the
    // domain transfers its (inside-fraction weighted) mass onto the edges of
    // its unit-step decomposition, keeping the cut metric calibrated for
    // interfaces that meet the boundary.
    for (const Dir& d : dirs) {
      for (int flip = 0; flip < 2; ++flip) {
        const int ux = flip ? -d.dx : d.dx;
        const int uy = flip ? -d.dy : d.dy;
        if (g.cell_at(i + ux, j + uy) >= 0) continue;
        const double rho = inside_fraction(dom.cells[id].x, dom.cells[id].y,
                                           ux * h, uy * h);
        if (rho <= 0.0) continue;
        auto transfer = [&](int px, int py) -> bool {
          const int nb = g.cell_at(i + px, j + py);
          if (nb < 0) return false;
          acc.add(id, nb, rho * d.c * h * midpoint_weight(id, nb));
          return true;
        };
        const auto comps = decompose(ux, uy);
        if (!comps.empty()) {
          for (const auto& [px, py] : comps) {
            if (transfer(px, py)) continue;
            for (const auto& [qx, qy] : fallback_chain(px, py))
              if (transfer(qx, qy)) break;
          }
        } else {
          for (const auto& [qx, qy] : fallback_chain(ux, uy))
            if (transfer(qx, qy)) break;
        }
      }
    }
  }

  dom.faces.reserve(acc.w.size());
  for (const auto& [key, w] : acc.w)
    dom.faces.push_back({key.first, key.second, w});
}

void check_weight_positive(double w, double x, double y) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    std::ostringstream os;
    os << "non-positive weight " << w << " sampled at (" << x << ", " << y
       << ")";
    throw std::invalid_argument(os.str());
  }
}

// Owner assignment: nearest boundary cell (cells missing an N4 neighbour) by
// centroid distance, lowest id on ties.
std::vector<int> boundary_cells_of(const MeshDomain& dom) {
  const GridInfo& g = *dom.grid;
  std::vector<int> out;
  for (int id = 0; id < dom.cell_count(); ++id) {
    const int i = g.ix[id], j = g.iy[id];
    if (g.cell_at(i + 1, j) < 0 || g.cell_at(i - 1, j) < 0 ||
        g.cell_at(i, j + 1) < 0 || g.cell_at(i, j - 1) < 0)
      out.push_back(id);
  }
  return out;
}

int nearest_cell(const MeshDomain& dom, const std::vector<int>& candidates,
                 double x, double y) {
  int best = -1;
  double best_d = 0.0;
  for (int id : candidates) {
    const double dx = dom.cells[id].x - x, dy = dom.cells[id].y - y;
    const double d = dx * dx + dy * dy;
    if (best < 0 || d < best_d - 1e-15 ||
        (std::abs(d - best_d) <= 1e-15 && id < best)) {
      best = id;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

Stencil stencil_from_string(const std::string& s) {
  if (s == "N4" || s == "n4") return Stencil::N4;
  if (s == "N8" || s == "n8") return Stencil::N8;
  if (s == "N16" || s == "n16") return Stencil::N16;
  throw std::invalid_argument("unknown stencil '" + s + "'");
}

std::string to_string(Stencil s) {
  switch (s) {
    case Stencil::N4: return "N4";
    case Stencil::N8: return "N8";
    case Stencil::N16: return "N16";
  }
  return "?";
}

double MeshDomain::total_measure() const {
  double s = 0.0;
  for (const Cell& c : cells) s += c.mu;
  return s;
}

double MeshDomain::boundary_measure() const {
  double s = 0.0;
  for (const BoundaryFace& b : boundary) s += b.p;
  return s;
}

bool MeshDomain::connected() const {
  const int n = cell_count();
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const InteriorFace& f : faces) {
    adj[f.a].push_back(f.b);
    adj[f.b].push_back(f.a);
  }
  std::vector<uint8_t> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push_back(v);
      }
  }
  return reached == n;
}

void MeshDomain::validate() const {
  const int n = cell_count();
  if (n == 0) throw std::invalid_argument("domain has no cells");
  for (const Cell& c : cells)
    if (!(c.mu > 0.0) || !std::isfinite(c.mu))
      throw std::invalid_argument("non-positive cell measure");
  std::set<std::pair<int, int>> seen;
  for (const InteriorFace& f : faces) {
    if (f.a < 0 || f.b < 0 || f.a >= n || f.b >= n || f.a == f.b)
      throw std::invalid_argument("interior face endpoints out of range");
    if (!(f.w > 0.0) || !std::isfinite(f.w))
      throw std::invalid_argument("non-positive weight");
    auto key = std::minmax(f.a, f.b);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("duplicate interior face");
  }
  for (const BoundaryFace& b : boundary) {
    if (b.cell < 0 || b.cell >= n)
      throw std::invalid_argument("boundary face owner out of range");
    if (!(b.p > 0.0) || !std::isfinite(b.p))
      throw std::invalid_argument("non-positive boundary measure");
  }
  if (n > 1 && !connected())
    throw std::invalid_argument("cell adjacency graph is disconnected");
}

MeshDomain build_grid_rectangle(int nx, int ny, const Rect& extent,
                                const WeightFn& weight, Stencil stencil,
                                int boundary_segments) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("need nx, ny >= 2");
  const double W = extent.width(), H = extent.height();
  if (!(W > 0.0) || !(H > 0.0))
    throw std::invalid_argument("degenerate extent");
  const double hx = W / nx, hy = H / ny;
  if (stencil != Stencil::N4 && std::abs(hx - hy) > 1e-12 * std::max(hx, hy))
    throw std::invalid_argument("N8/N16 stencils require square cells");
  int m = boundary_segments;
  if (m <= 0) m = 2 * (nx + ny);
  if (m < 2 * (nx + ny))
    throw std::invalid_argument("boundary_segments must be >= 2(nx+ny)");

  MeshDomain dom;
  dom.stencil = stencil;
  dom.spacing = hx;
  {
    std::ostringstream os;
    os << "rectangle " << nx << "x" << ny << " [" << extent.x0 << ","
       << extent.y0 << "]x[" << extent.x1 << "," << extent.y1 << "] "
       << to_string(stencil);
    dom.descriptor = os.str();
  }

  GridInfo g;
  g.nx = nx;
  g.ny = ny;
  g.x0 = extent.x0;
  g.y0 = extent.y0;
  g.hx = hx;
  g.hy = hy;
  g.at.assign(static_cast<size_t>(nx) * ny, -1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double cx = extent.x0 + (i + 0.5) * hx;
      const double cy = extent.y0 + (j + 0.5) * hy;
      const double w = weight(cx, cy);
      check_weight_positive(w, cx, cy);
      g.at[static_cast<size_t>(j) * nx + i] = dom.cell_count();
      g.ix.push_back(i);
      g.iy.push_back(j);
      dom.cells.push_back({hx * hy * w, cx, cy});
    }
  dom.grid = std::move(g);

  auto inside_fraction = [&](double x, double y, double dx, double dy) {
    double t = 1.0;
    if (dx > 0) t = std::min(t, (extent.x1 - x) / dx);
    if (dx < 0) t = std::min(t, (extent.x0 - x) / dx);
    if (dy > 0) t = std::min(t, (extent.y1 - y) / dy);
    if (dy < 0) t = std::min(t, (extent.y0 - y) / dy);
    return std::max(0.0, t);
  };
  build_lattice_faces(dom, weight, inside_fraction);

  // Boundary: split the continuum rectangle boundary into m equal-length
  // segments, counterclockwise from (x0, y0).
  const double L = 2.0 * (W + H);
  const double seg = L / m;
  const std::vector<int> bcells = boundary_cells_of(dom);
  auto point_at = [&](double s) -> std::pair<double, double> {
    s = std::fmod(s, L);
    if (s < 0) s += L;
    if (s < W) return {extent.x0 + s, extent.y0};
    s -= W;
    if (s < H) return {extent.x1, extent.y0 + s};
    s -= H;
    if (s < W) return {extent.x1 - s, extent.y1};
    s -= W;
    return {extent.x0, extent.y1 - s};
  };
  dom.boundary.reserve(m);
  for (int k = 0; k < m; ++k) {
    const double smid = (k + 0.5) * seg;
    const auto [bx, by] = point_at(smid);
    const double w = weight(bx, by);
    check_weight_positive(w, bx, by);
    BoundaryFace f;
    f.p = seg * w;
    f.x = bx;
    f.y = by;
    f.s = smid;
    f.cell = nearest_cell(dom, bcells, bx, by);
    dom.boundary.push_back(f);
  }
  dom.validate();
  return dom;
}

MeshDomain build_disk(int n, double radius, const WeightFn& weight,
                      Stencil stencil, int boundary_segments) {
  if (n < 8) throw std::invalid_argument("need n >= 8 cells across diameter");
  if (!(radius > 0.0)) throw std::invalid_argument("degenerate radius");
  const double h = 2.0 * radius / n;
  int m = boundary_segments;
  if (m <= 0) m = 8 * n;

  MeshDomain dom;
  dom.stencil = stencil;
  dom.spacing = h;
  {
    std::ostringstream os;
    os << "disk n=" << n << " r=" << radius << " " << to_string(stencil);
    dom.descriptor = os.str();
  }

  GridInfo g;
  g.nx = n;
  g.ny = n;
  g.x0 = -radius;
  g.y0 = -radius;
  g.hx = h;
  g.hy = h;
  g.at.assign(static_cast<size_t>(n) * n, -1);
  const double r2 = radius * radius;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double cx = -radius + (i + 0.5) * h;
      const double cy = -radius + (j + 0.5) * h;
      if (cx * cx + cy * cy >= r2) continue;  // membership by centroid
      const double w = weight(cx, cy);
      check_weight_positive(w, cx, cy);
      g.at[static_cast<size_t>(j) * n + i] = dom.cell_count();
      g.ix.push_back(i);
      g.iy.push_back(j);
      dom.cells.push_back({h * h * w, cx, cy});
    }
  dom.grid = std::move(g);

  auto inside_fraction = [&](double x, double y, double dx, double dy) {
    const double a = dx * dx + dy * dy;
    const double b = 2.0 * (x * dx + y * dy);
    const double c = x * x + y * y - r2;
    const double disc = b * b - 4.0 * a * c;
    if (disc <= 0.0) return 1.0;
    const double t = (-b + std::sqrt(disc)) / (2.0 * a);
    return std::clamp(t, 0.0, 1.0);
  };
  build_lattice_faces(dom, weight, inside_fraction);

  const std::vector<int> bcells = boundary_cells_of(dom);
  const double arc = 2.0 * kPi * radius / m;
  dom.boundary.reserve(m);
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * kPi * (k + 0.5) / m;
    const double bx = radius * std::cos(theta);
    const double by = radius * std::sin(theta);
    const double w = weight(bx, by);
    check_weight_positive(w, bx, by);
    BoundaryFace f;
    f.p = arc * w;
    f.x = bx;
    f.y = by;
    f.s = theta;  // arc parameter = angle for circles
    f.cell = nearest_cell(dom, bcells, bx, by);
    dom.boundary.push_back(f);
  }
  dom.validate();
  return dom;
}

MeshDomain parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("graph JSON parse error: ") +
                                e.what());
  }
  if (!j.contains("cells") || !j.contains("faces") || !j.contains("boundary"))
    throw std::invalid_argument("graph JSON missing cells/faces/boundary");

  MeshDomain dom;
  dom.descriptor = "graph";
  std::map<int64_t, int> remap;
  for (const auto& c : j["cells"]) {
    const int64_t id = c.at("id").get<int64_t>();
    const double mu = c.at("mu").get<double>();
    if (remap.count(id)) throw std::invalid_argument("duplicate cell id");
    remap[id] = dom.cell_count();
    dom.cells.push_back({mu, 0.0, 0.0});
  }
  auto cell_of = [&](int64_t id) {
    auto it = remap.find(id);
    if (it == remap.end())
      throw std::invalid_argument("face references unknown cell id");
    return it->second;
  };
  for (const auto& f : j["faces"])
    dom.faces.push_back({cell_of(f.at("a").get<int64_t>()),
                         cell_of(f.at("b").get<int64_t>()),
                         f.at("w").get<double>()});
  for (const auto& b : j["boundary"]) {
    BoundaryFace f;
    f.cell = cell_of(b.at("cell").get<int64_t>());
    f.p = b.at("p").get<double>();
    if (b.contains("pos")) {
      if (b["pos"].is_array() && b["pos"].size() == 2) {
        f.x = b["pos"][0].get<double>();
        f.y = b["pos"][1].get<double>();
      } else if (b["pos"].is_number()) {
        f.s = b["pos"].get<double>();
      }
    }
    dom.boundary.push_back(f);
  }
  dom.validate();
  return dom;
}

MeshDomain load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

std::string graph_to_json(const MeshDomain& dom) {
  nlohmann::json j;
  j["cells"] = nlohmann::json::array();
  for (int i = 0; i < dom.cell_count(); ++i)
    j["cells"].push_back({{"id", i}, {"mu", dom.cells[i].mu}});
  j["faces"] = nlohmann::json::array();
  for (const InteriorFace& f : dom.faces)
    j["faces"].push_back({{"a", f.a}, {"b", f.b}, {"w", f.w}});
  j["boundary"] = nlohmann::json::array();
  for (const BoundaryFace& b : dom.boundary)
    j["boundary"].push_back({{"cell", b.cell}, {"p", b.p}, {"pos", b.s}});
  return j.dump(2);
}

void save_graph(const MeshDomain& dom, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << graph_to_json(dom) << "\n";
}

}  // namespace neumann1
