#pragma once

#include "hardylab/errors.hpp"

namespace hardylab {

/// Domain carrying an explicit Green's function.
struct GreenDomain {
  enum class Kind { Disk, HalfPlane, Sector };
  Kind kind = Kind::Disk;
  double theta = 0.0;            // HalfPlane: {Re z > theta}
  double alpha = 2.0;            // Sector: opening pi/alpha, symmetric about the real axis
  cplx vertex{0.5, 0.0};         // Sector vertex

  static GreenDomain disk() { return {}; }
  static GreenDomain half_plane(double theta) {
    GreenDomain d;
    d.kind = Kind::HalfPlane;
    d.theta = theta;
    return d;
  }
  /// Sector {|arg(z - vertex)| < pi/(2 alpha)}. alpha = 1 is the half-plane
  /// {Re z > Re vertex} and is accepted for continuity checks.
  static GreenDomain sector(double alpha, cplx vertex) {
    GreenDomain d;
    d.kind = Kind::Sector;
    d.alpha = alpha;
    d.vertex = vertex;
    return d;
  }

  bool contains(cplx z) const;
};

/// Green's function g_D(z, w) >= 0 with pole at w. Throws DomainError if z or w lies
/// outside D, PreconditionError if z == w.
double green(const GreenDomain& domain, cplx z, cplx w);

}  // namespace hardylab
