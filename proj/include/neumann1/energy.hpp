#pragma once

#include "neumann1/boundary.hpp"
#include "neumann1/mesh.hpp"

#include <cstdint>

namespace neumann1 {

using CellField = std::vector<double>;
using BoundaryField = std::vector<double>;

class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int domain_size) : in_(domain_size, 0) {}
  static CellSet all(int domain_size) {
    CellSet s(domain_size);
    std::fill(s.in_.begin(), s.in_.end(), 1);
    return s;
  }

  bool contains(int i) const { return in_[i] != 0; }
  void set(int i, bool member) { in_[i] = member ? 1 : 0; }
  int domain_size() const { return static_cast<int>(in_.size()); }
  int count() const;
  bool empty() const { return count() == 0; }

  CellSet complement() const;
  friend CellSet set_union(const CellSet& a, const CellSet& b);
  friend CellSet set_intersection(const CellSet& a, const CellSet& b);
  friend bool subset_of(const CellSet& a, const CellSet& b);
  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.in_ == b.in_;
  }

  double measure(const MeshDomain& domain) const;
  double symmetric_difference_measure(const MeshDomain& domain,
                                      const CellSet& other) const;
  CellField indicator(int sign = 1) const;

 private:
  std::vector<uint8_t> in_;
};

struct EnergyReport {
  double tv_interior = 0.0;
  double boundary_term = 0.0;
  double total = 0.0;
};

// Discrete trace: value of u at the owner cell of each boundary face.
BoundaryField trace(const MeshDomain& domain, const CellField& u);

// I(u) = sum_faces w_ab |u_a - u_b| + sum_b f_b u_{c(b)} p_b
EnergyReport energy(const MeshDomain& domain, const BoundaryData& bd,
                    const CellField& u);

EnergyReport energy_set(const MeshDomain& domain, const BoundaryData& bd,
                        const CellSet& e, int sign);

double perimeter(const MeshDomain& domain, const CellSet& e);

struct SplitCheck {
  EnergyReport whole;     // I(u)
  EnergyReport positive;  // I(u_+)
  EnergyReport negative;  // I(-u_-)
};
SplitCheck split_check(const MeshDomain& domain, const BoundaryData& bd,
                       const CellField& u);

struct TraceBoundaryMeasures {
  double on_negative = 0.0;  // P(Omega, boundary of E  ∩ {f < -tol})
  double on_positive = 0.0;  // P(Omega, boundary of E  ∩ {f > +tol})
  double total = 0.0;        // P(Omega, boundary of E)
};
TraceBoundaryMeasures trace_boundary_measures(const MeshDomain& domain,
                                              const BoundaryData& bd,
                                              const CellSet& e,
                                              double sign_tol = 0.0);

struct PerimeterBoundVerdict {
  double lhs = 0.0;  // P(E, X) = P(E, Omega) + P(Omega, boundary of E)
  double rhs = 0.0;  // I(chi_E) + 2 P(Omega, X)
  bool holds = false;
};
// Requires |f| <= 1; throws when the inequality fails beyond rounding, which
// signals an energy or measure bug.
PerimeterBoundVerdict whole_space_perimeter_bound(const MeshDomain& domain,
                                                  const BoundaryData& bd,
                                                  const CellSet& e);

// Exact finite-sum coarea evaluation of I(u) over the sorted distinct levels
// of u, for -1 <= u <= 1.
double coarea_energy(const MeshDomain& domain, const BoundaryData& bd,
                     const CellField& u);

}  // namespace neumann1
