#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hardylab/character.hpp"
#include "hardylab/dirichlet_series.hpp"
#include "hardylab/polynomial.hpp"

namespace hardylab {

/// phi(s) = c + r 2^{-s}.
struct AffineDesc {
  cplx c;
  cplx r;
};

/// phi(s) = Phi(2^{-s}) with Phi a polynomial.
struct DiskLiftDesc {
  Polynomial poly;
};

/// phi(s) = R(2^{-s}), R(z) = 1/2 + ((1 - z)/(1 + z))^{1/alpha}: a Riemann map of the
/// disk onto the sector |arg(w - 1/2)| < pi/(2 alpha) with R(0) = 3/2.
///
/// `taylor` holds the first K+1 Taylor coefficients of R. The polynomial surrogate
/// sum_{k<=K} taylor_k (rho z)^k stays inside the sector up to `half_angle`.
struct SectorLiftDesc {
  double alpha = 2.0;
  int order = 32;
  std::vector<cplx> taylor;
  double rho = 1.0;
  double half_angle = 0.0;
};

struct GenericDesc {};

using Descriptor = std::variant<AffineDesc, DiskLiftDesc, SectorLiftDesc, GenericDesc>;

/// Sampling parameters for class validation.
struct ValidationGrid {
  int n_theta = 4096;       // boundary samples on the circle (disk-type symbols)
  int n_per_prime = 48;     // torus samples per prime (generic symbols, J <= 3)
  double sigma = 0.0;       // abscissa of the sampled vertical line (>= 0)
};

struct ValidationReport {
  bool valid = false;
  int c0 = 0;
  double margin = 0.0;            // refined sampled inf Re phi minus the class bound
  double certified_margin = 0.0;  // margin minus the Lipschitz sampling slack
  double inf_re = 0.0;            // refined sampled inf Re phi
  cplx witness{0.0, 0.0};         // s (on Re s = sigma) where the inf is attained
  std::string branch;             // "G0", "G_c0", "imaginary-constant"
  std::string method;             // "circle", "torus-grid", "coefficient-bound", "exact"
};

/// Symbol psi(s) = c0 s + phi(s) of a bounded composition operator on H2.
class Symbol {
 public:
  Symbol(int c0, DirichletSeries phi, Descriptor desc);

  int c0() const noexcept { return c0_; }
  const Descriptor& descriptor() const noexcept { return desc_; }
  std::string kind() const;
  bool validated() const noexcept { return report_.valid; }
  double margin() const noexcept { return report_.margin; }
  const ValidationReport& report() const noexcept { return report_; }
  void set_report(ValidationReport r) { report_ = std::move(r); }

  /// phi(+inf) = a_1.
  cplx phi_at_infinity() const;

  /// Dirichlet coefficients of phi truncated at n_max.
  DirichletSeries phi_series(std::size_t n_max) const;
  /// Coefficients as stored (generic symbols), or the minimal dense series covering
  /// the closed-form descriptor up to 2^12.
  const DirichletSeries& stored_series() const noexcept { return phi_; }

  /// True for Affine, DiskLift and SectorLift: phi = Phi(2^{-s}).
  bool is_disk_type() const noexcept;
  /// Phi(z) and Phi'(z) for disk-type symbols; SectorLift uses the exact map.
  cplx disk_map(cplx z) const;
  cplx disk_map_deriv(cplx z) const;
  /// Polynomial Phi for Affine/DiskLift.
  Polynomial disk_polynomial() const;

  cplx phi(cplx s) const;
  cplx phi_deriv(cplx s) const;
  /// psi(s) = c0 s + phi(s).
  cplx psi(cplx s) const { return static_cast<double>(c0_) * s + phi(s); }
  cplx psi_deriv(cplx s) const { return static_cast<double>(c0_) + phi_deriv(s); }

  /// phi_chi(s): phi with coefficients twisted by chi.
  cplx phi_twisted(const Character& chi, cplx s) const;

  /// Upper bound on Re phi over C_0 (exact boundary max for disk types).
  double sup_re() const;
  /// Upper bound on |phi(s) - a_1| for Re s >= sigma.
  double deviation_bound(double sigma) const;

  /// Axis-aligned box [re_min, re_max] x [im_min, im_max] containing phi(C_0) when
  /// bounded in imaginary part; sector lifts are clipped at Re w <= 1/2 + re_extent.
  struct Box {
    double re_min, re_max, im_min, im_max;
    double sector_angle = 0.0;  // if > 0, the range also lies in |arg(w - 1/2)| < sector_angle
  };
  std::optional<Box> range_box(double re_extent = 40.0) const;

 private:
  int c0_;
  DirichletSeries phi_;
  Descriptor desc_;
  ValidationReport report_;
};

/// Factories. All validate and throw ClassViolation on failure.
Symbol make_affine(cplx c, cplx r);
Symbol make_disk_lift(const Polynomial& poly, const ValidationGrid& grid = {});
Symbol make_sector_lift(double alpha, int order = 32);
/// Constant symbol phi = c (c0 = 0 requires Re c > 1/2).
Symbol make_constant(cplx c);
/// psi(s) = c0 s + phi(s) with explicit coefficients.
Symbol make_generic(int c0, const DirichletSeries& phi, const ValidationGrid& grid = {});

/// Class-membership check by boundary sampling (see ValidationGrid).
ValidationReport validate_class(const Symbol& sym, const ValidationGrid& grid = {});

/// Taylor coefficients of ((1 - z)/(1 + z))^{beta} up to order K.
std::vector<cplx> sector_taylor(double beta, int order);

/// Exact sector map R(z) and its derivative.
cplx sector_map(double alpha, cplx z);
cplx sector_map_deriv(double alpha, cplx z);

}  // namespace hardylab
