#include "neumann1/boundary.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace neumann1 {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

// Angle in [from, to) going counterclockwise, with wraparound.
bool angle_in(double a, double from, double to) {
  a = wrap_angle(a);
  from = wrap_angle(from);
  to = wrap_angle(to);
  if (from <= to) return a >= from && a < to;
  return a >= from || a < to;
}

double finalize_residual(const MeshDomain& domain, std::vector<double>& v,
                         BoundaryData& bd) {
  double r = 0.0;
  bool bounded = true;
  for (size_t b = 0; b < v.size(); ++b) {
    if (!std::isfinite(v[b]))
      throw std::invalid_argument("non-finite boundary value");
    r += v[b] * domain.boundary[b].p;
    if (std::abs(v[b]) > 1.0 + 1e-15) bounded = false;
  }
  bd.values = std::move(v);
  bd.residual = r;
  bd.sup_norm_le_1 = bounded;
  return r;
}

}  // namespace

double balance_tolerance(const MeshDomain& domain) {
  return 1e-12 * domain.boundary_measure();
}

BoundaryData make_boundary_data(const MeshDomain& domain,
                                const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != domain.boundary_count())
    throw std::invalid_argument("boundary value count mismatch");
  BoundaryData bd;
  std::vector<double> v = values;
  finalize_residual(domain, v, bd);
  return bd;
}

BoundaryData make_boundary_data(const MeshDomain& domain,
                                const BoundarySpec& spec) {
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  if (domain.grid) {
    x_min = domain.grid->x0;
    x_max = domain.grid->x0 + domain.grid->nx * domain.grid->hx;
    y_min = domain.grid->y0;
    y_max = domain.grid->y0 + domain.grid->ny * domain.grid->hy;
  }
  const double eps = 1e-9 * std::max({1.0, x_max - x_min, y_max - y_min});

  // Pieces are matched against the face midpoint; the first matching piece
  // wins, so touching interval ends are unambiguous.
  auto side_matches = [&](const BoundaryPiece& piece, const BoundaryFace& f) {
    if (!domain.grid)
      throw std::invalid_argument("side pieces need a grid-built domain");
    bool on_side;
    double coord;
    if (piece.side == "bottom") {
      on_side = std::abs(f.y - y_min) < eps;
      coord = f.x;
    } else if (piece.side == "top") {
      on_side = std::abs(f.y - y_max) < eps;
      coord = f.x;
    } else if (piece.side == "left") {
      on_side = std::abs(f.x - x_min) < eps;
      coord = f.y;
    } else if (piece.side == "right") {
      on_side = std::abs(f.x - x_max) < eps;
      coord = f.y;
    } else {
      throw std::invalid_argument("unknown side '" + piece.side + "'");
    }
    return on_side && coord >= piece.from - eps && coord <= piece.to + eps;
  };

  std::vector<double> v(domain.boundary_count());
  for (int b = 0; b < domain.boundary_count(); ++b) {
    const BoundaryFace& f = domain.boundary[b];
    bool matched = false;
    for (const BoundaryPiece& piece : spec.pieces) {
      const bool hit = piece.kind == BoundaryPiece::Kind::Arc
                           ? angle_in(f.s, piece.from, piece.to)
                           : side_matches(piece, f);
      if (hit) {
        v[b] = piece.value;
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::ostringstream os;
      os << "boundary spec does not cover face " << b << " at (" << f.x << ", "
         << f.y << ")";
      throw std::invalid_argument(os.str());
    }
  }
  BoundaryData bd;
  finalize_residual(domain, v, bd);
  return bd;
}

double validate_balance(const MeshDomain& domain, const BoundaryData& bd,
                        double tol) {
  double r = 0.0;
  for (int b = 0; b < domain.boundary_count(); ++b)
    r += bd.values[b] * domain.boundary[b].p;
  if (std::abs(r) > tol) {
    std::ostringstream os;
    os << "boundary data imbalance: residual " << r << " exceeds " << tol;
    throw std::runtime_error(os.str());
  }
  return r;
}

BoundaryData rebalance(const MeshDomain& domain, const BoundaryData& bd) {
  double pos = 0.0, neg = 0.0;
  for (int b = 0; b < domain.boundary_count(); ++b) {
    const double m = bd.values[b] * domain.boundary[b].p;
    if (m > 0) pos += m;
    if (m < 0) neg -= m;
  }
  if (pos == 0.0 && neg == 0.0) return bd;
  if (pos == 0.0 || neg == 0.0)
    throw std::invalid_argument("cannot rebalance single-signed data");
  std::vector<double> v = bd.values;
  if (pos > neg) {
    const double s = neg / pos;
    for (size_t b = 0; b < v.size(); ++b)
      if (v[b] > 0) v[b] *= s;
  } else if (neg > pos) {
    const double s = pos / neg;
    for (size_t b = 0; b < v.size(); ++b)
      if (v[b] < 0) v[b] *= s;
  }
  BoundaryData out;
  finalize_residual(domain, v, out);
  return out;
}

double boundary_l1_distance(const MeshDomain& domain, const BoundaryData& f,
                            const BoundaryData& h) {
  double d = 0.0;
  for (int b = 0; b < domain.boundary_count(); ++b)
    d += std::abs(f.values[b] - h.values[b]) * domain.boundary[b].p;
  return d;
}

}  // namespace neumann1
