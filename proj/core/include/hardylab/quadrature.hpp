#pragma once

#include <functional>
#include <vector>

#include "hardylab/root_finding.hpp"
#include "hardylab/symbol.hpp"

namespace hardylab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached; n in [1, 64]).
const GaussRule& gauss_legendre(int n);

/// Quadrature node carrying the area weight and the counting-function value there.
struct QuadNode {
  cplx w;
  double dA;
  double m;
};

/// Leaf cell of the adaptive partition: area and M-mass (integral of M over the cell).
struct QuadCell {
  Rect box;
  double area;
  double mass;
};

/// Reusable discretisation of the measure M(w) dA(w) on its numerical support.
struct MeasureRule {
  std::vector<QuadNode> nodes;
  std::vector<QuadCell> cells;
  double driver_value = 0.0;  // integral of the refinement driver
  double err_est = 0.0;       // estimated absolute error of driver_value
  bool converged = false;     // tolerance met before the cell budget ran out

  /// Sum of dA * F(w, m) over the nodes.
  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (const QuadNode& n : nodes) acc += n.dA * f(n.w, n.m);
    return acc;
  }
  double total_mass() const;
};

struct CubatureConfig {
  int order = 8;              // Gauss points per direction on leaf cells
  double rel_tol = 1e-7;
  double abs_tol = 1e-14;
  int max_cells = 20000;
  double re_extent = 40.0;    // clip of unbounded supports: Re w <= 1/2 + re_extent
  double re_floor = 0.0;      // integrate over Re w >= 1/2 + re_floor only
  int n_strips = 40;          // dyadic strips toward Re w = 1/2
};

using Driver = std::function<double(cplx w, double m)>;
using RealFn = std::function<double(cplx w)>;

/// Adaptive tensor Gauss-Legendre discretisation of M over `box`, refined until the
/// integral of driver(w, M(w)) meets the tolerance.
MeasureRule build_measure_rule(const RealFn& counting, const Symbol::Box& box, const Driver& driver,
                               const CubatureConfig& cfg = {});

/// Same, with M = counting_value(sym, ., a) and the symbol's range box.
MeasureRule build_measure_rule(const Symbol& sym, const Driver& driver, const CubatureConfig& cfg = {},
                               double a = 0.0);

struct Integral2D {
  double value = 0.0;
  double err_est = 0.0;
  bool converged = false;
};

/// Adaptive cubature of a real function over a rectangle.
Integral2D integrate_rect(const RealFn& f, const Rect& box, double rel_tol = 1e-9, int max_cells = 20000,
                          int order = 8);

/// Adaptive 1-D integral: recursive bisection until Gauss orders 12 and 7 agree.
double integrate_1d(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-11);

}  // namespace hardylab
