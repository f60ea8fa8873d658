#include "hardylab/green.hpp"

#include <cmath>
#include <numbers>

namespace hardylab {

bool GreenDomain::contains(cplx z) const {
  switch (kind) {
    case Kind::Disk:
      return std::abs(z) < 1.0;
    case Kind::HalfPlane:
      return z.real() > theta;
    case Kind::Sector: {
      const cplx u = z - vertex;
      return u != cplx(0.0, 0.0) && std::abs(std::arg(u)) < std::numbers::pi / (2.0 * alpha);
    }
  }
  return false;
}

double green(const GreenDomain& domain, cplx z, cplx w) {
  if (domain.kind == GreenDomain::Kind::Sector && !(domain.alpha >= 1.0)) {
    throw PreconditionError("green: sector requires alpha >= 1");
  }
  if (!domain.contains(z) || !domain.contains(w)) throw DomainError("green: point outside the domain");
  if (z == w) throw PreconditionError("green: z == w is the pole");
  switch (domain.kind) {
    case GreenDomain::Kind::Disk:
      return std::log(std::abs((1.0 - z * std::conj(w)) / (z - w)));
    case GreenDomain::Kind::HalfPlane:
      return std::log(std::abs((z + std::conj(w) - 2.0 * domain.theta) / (z - w)));
    case GreenDomain::Kind::Sector: {
      const cplx a = std::pow(z - domain.vertex, domain.alpha);
      const cplx b = std::pow(w - domain.vertex, domain.alpha);
      return std::log(std::abs((a + std::conj(b)) / (a - b)));
    }
  }
  return 0.0;
}

}  // namespace hardylab
