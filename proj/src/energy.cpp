#include "neumann1/energy.hpp"

#include "neumann1/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace neumann1 {

namespace {

// Scratch arrays for the kernel calls; rebuilt per call, cheap relative to the
// sums for the mesh sizes we use.
struct FaceArrays {
  std::vector<int> a, b;
  std::vector<double> w;
  explicit FaceArrays(const MeshDomain& d) {
    a.reserve(d.faces.size());
    b.reserve(d.faces.size());
    w.reserve(d.faces.size());
    for (const InteriorFace& f : d.faces) {
      a.push_back(f.a);
      b.push_back(f.b);
      w.push_back(f.w);
    }
  }
};

void check_field(const MeshDomain& domain, const CellField& u) {
  if (static_cast<int>(u.size()) != domain.cell_count())
    throw std::invalid_argument("field size does not match cell count");
}

}  // namespace

int CellSet::count() const {
  int c = 0;
  for (uint8_t v : in_) c += v;
  return c;
}

CellSet CellSet::complement() const {
  CellSet out(*this);
  for (auto& v : out.in_) v = v ? 0 : 1;
  return out;
}

CellSet set_union(const CellSet& a, const CellSet& b) {
  CellSet out(a);
  for (size_t i = 0; i < out.in_.size(); ++i) out.in_[i] |= b.in_[i];
  return out;
}

CellSet set_intersection(const CellSet& a, const CellSet& b) {
  CellSet out(a);
  for (size_t i = 0; i < out.in_.size(); ++i) out.in_[i] &= b.in_[i];
  return out;
}

bool subset_of(const CellSet& a, const CellSet& b) {
  for (size_t i = 0; i < a.in_.size(); ++i)
    if (a.in_[i] && !b.in_[i]) return false;
  return true;
}

double CellSet::measure(const MeshDomain& domain) const {
  double s = 0.0;
  for (size_t i = 0; i < in_.size(); ++i)
    if (in_[i]) s += domain.cells[i].mu;
  return s;
}

double CellSet::symmetric_difference_measure(const MeshDomain& domain,
                                             const CellSet& other) const {
  double s = 0.0;
  for (size_t i = 0; i < in_.size(); ++i)
    if (in_[i] != other.in_[i]) s += domain.cells[i].mu;
  return s;
}

CellField CellSet::indicator(int sign) const {
  CellField u(in_.size(), 0.0);
  for (size_t i = 0; i < in_.size(); ++i)
    if (in_[i]) u[i] = static_cast<double>(sign);
  return u;
}

BoundaryField trace(const MeshDomain& domain, const CellField& u) {
  check_field(domain, u);
  BoundaryField t(domain.boundary_count());
  for (int b = 0; b < domain.boundary_count(); ++b)
    t[b] = u[domain.boundary[b].cell];
  return t;
}

EnergyReport energy(const MeshDomain& domain, const BoundaryData& bd,
                    const CellField& u) {
  check_field(domain, u);
  FaceArrays fa(domain);
  EnergyReport rep;
  rep.tv_interior = kernels::weighted_abs_diff_sum(
      fa.a.data(), fa.b.data(), fa.w.data(), fa.w.size(), u.data());
  std::vector<int> owner(domain.boundary_count());
  std::vector<double> fp(domain.boundary_count());
  for (int b = 0; b < domain.boundary_count(); ++b) {
    owner[b] = domain.boundary[b].cell;
    fp[b] = bd.values[b] * domain.boundary[b].p;
  }
  rep.boundary_term =
      kernels::owner_weighted_sum(owner.data(), fp.data(), fp.size(), u.data());
  rep.total = rep.tv_interior + rep.boundary_term;
  return rep;
}

EnergyReport energy_set(const MeshDomain& domain, const BoundaryData& bd,
                        const CellSet& e, int sign) {
  EnergyReport rep;
  double tv = 0.0;
  for (const InteriorFace& f : domain.faces)
    if (e.contains(f.a) != e.contains(f.b)) tv += f.w;
  double bt = 0.0;
  for (int b = 0; b < domain.boundary_count(); ++b)
    if (e.contains(domain.boundary[b].cell))
      bt += bd.values[b] * domain.boundary[b].p;
  rep.tv_interior = tv;
  rep.boundary_term = sign * bt;
  rep.total = rep.tv_interior + rep.boundary_term;
  return rep;
}

double perimeter(const MeshDomain& domain, const CellSet& e) {
  double tv = 0.0;
  for (const InteriorFace& f : domain.faces)
    if (e.contains(f.a) != e.contains(f.b)) tv += f.w;
  return tv;
}

SplitCheck split_check(const MeshDomain& domain, const BoundaryData& bd,
                       const CellField& u) {
  check_field(domain, u);
  CellField up(u.size()), um(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    up[i] = std::max(u[i], 0.0);
    um[i] = -std::max(-u[i], 0.0);  // -u_-
  }
  SplitCheck out;
  out.whole = energy(domain, bd, u);
  out.positive = energy(domain, bd, up);
  out.negative = energy(domain, bd, um);
  return out;
}

TraceBoundaryMeasures trace_boundary_measures(const MeshDomain& domain,
                                              const BoundaryData& bd,
                                              const CellSet& e,
                                              double sign_tol) {
  TraceBoundaryMeasures m;
  for (int b = 0; b < domain.boundary_count(); ++b) {
    if (!e.contains(domain.boundary[b].cell)) continue;
    const double p = domain.boundary[b].p;
    m.total += p;
    if (bd.values[b] < -sign_tol) m.on_negative += p;
    if (bd.values[b] > sign_tol) m.on_positive += p;
  }
  return m;
}

PerimeterBoundVerdict whole_space_perimeter_bound(const MeshDomain& domain,
                                                  const BoundaryData& bd,
                                                  const CellSet& e) {
  if (!bd.sup_norm_le_1)
    throw std::invalid_argument(
        "whole_space_perimeter_bound requires |f| <= 1");
  const TraceBoundaryMeasures m = trace_boundary_measures(domain, bd, e);
  const EnergyReport rep = energy_set(domain, bd, e, +1);
  PerimeterBoundVerdict v;
  v.lhs = rep.tv_interior + m.total;
  v.rhs = rep.total + 2.0 * domain.boundary_measure();
  const double slack = 1e-12 * (std::abs(v.lhs) + std::abs(v.rhs) + 1.0);
  v.holds = v.lhs <= v.rhs + slack;
  if (!v.holds) {
    std::ostringstream os;
    os << "whole-space perimeter bound violated: " << v.lhs << " > " << v.rhs;
    throw std::runtime_error(os.str());
  }
  return v;
}

double coarea_energy(const MeshDomain& domain, const BoundaryData& bd,
                     const CellField& u) {
  check_field(domain, u);
  for (double v : u)
    if (v < -1.0 - 1e-12 || v > 1.0 + 1e-12)
      throw std::invalid_argument("coarea_energy expects -1 <= u <= 1");

  // I(u) = ∫_0^1 I(chi_{u>t}) dt + ∫_0^1 I(-chi_{u<-t}) dt, evaluated exactly:
  // both integrands are piecewise constant between consecutive distinct
  // levels of |u|.
  CellField up(u.size()), um(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    up[i] = std::max(u[i], 0.0);
    um[i] = std::max(-u[i], 0.0);
  }
  // negative side: I(-chi_{u<-t}) = I_{-f}(chi_{u_->t})
  BoundaryData neg = bd;
  for (auto& v : neg.values) v = -v;
  neg.residual = -neg.residual;

  double total = 0.0;
  {
    std::vector<double> levels{0.0, 1.0};
    for (double v : up)
      if (v > 0.0) levels.push_back(std::min(v, 1.0));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const int n = domain.cell_count();
    for (size_t k = 0; k + 1 < levels.size(); ++k) {
      const double t = levels[k], dt = levels[k + 1] - levels[k];
      CellSet e(n);
      for (int i = 0; i < n; ++i)
        if (up[i] > t) e.set(i, true);
      total += dt * energy_set(domain, bd, e, +1).total;
    }
    levels.assign({0.0, 1.0});
    for (double v : um)
      if (v > 0.0) levels.push_back(std::min(v, 1.0));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (size_t k = 0; k + 1 < levels.size(); ++k) {
      const double t = levels[k], dt = levels[k + 1] - levels[k];
      CellSet e(n);
      for (int i = 0; i < n; ++i)
        if (um[i] > t) e.set(i, true);
      total += dt * energy_set(domain, neg, e, +1).total;
    }
  }
  return total;
}

}  // namespace neumann1
