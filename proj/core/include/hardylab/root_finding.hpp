#pragma once

#include <functional>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

using AnalyticFn = std::function<cplx(cplx)>;

/// Closed rectangle [x0, x1] x [y0, y1] in the complex plane.
struct Rect {
  double x0, x1, y0, y1;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains(cplx z, double pad = 0.0) const {
    return z.real() >= x0 - pad && z.real() <= x1 + pad && z.imag() >= y0 - pad && z.imag() <= y1 + pad;
  }
};

struct RootFindConfig {
  double newton_tol = 1e-10;   // required residual |F(root)|
  double merge_tol = 1e-8;     // roots closer than this are merged
  double min_box = 1e-6;       // boxes below this size are reported as clusters
  double chunk_height = 1.0;   // initial boxes are split into chunks of this height
  double hazard_tol = 1e-12;   // |F| below this on a contour is a boundary hazard
  int max_retries = 5;         // jitter attempts on a boundary hazard
};

struct Root {
  cplx z;
  int multiplicity;
  double residual;
};

/// Winding number of F around the rectangle by adaptive tracking of arg F along
/// the edges. Throws BoundaryHazard when F (nearly) vanishes on the contour and
/// NonConvergence when the accumulated winding is more than 0.2 from an integer.
int winding_number(const AnalyticFn& f, const AnalyticFn& df, const Rect& box,
                   const RootFindConfig& cfg = {});

/// All zeros of F inside `box` (with multiplicity) by recursive argument-principle
/// bisection and Newton polishing. Boundary hazards at the outer box trigger up to
/// cfg.max_retries deterministic jitters of the box; `used_box` receives the box
/// actually searched.
std::vector<Root> find_zeros(const AnalyticFn& f, const AnalyticFn& df, const Rect& box,
                             const RootFindConfig& cfg = {}, Rect* used_box = nullptr);

}  // namespace hardylab
