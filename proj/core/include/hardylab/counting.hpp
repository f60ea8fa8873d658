#pragma once

#include <string>
#include <vector>

#include "hardylab/character.hpp"
#include "hardylab/green.hpp"
#include "hardylab/root_finding.hpp"
#include "hardylab/symbol.hpp"

namespace hardylab {

enum class CountingMethod { ExactDisk, StripEnum };

std::string to_string(CountingMethod m);

/// One evaluation of the (weighted) mean counting function with diagnostics.
struct CountingSample {
  cplx w{0.0, 0.0};
  double value = 0.0;
  CountingMethod method = CountingMethod::ExactDisk;
  double T = 0.0;
  double sigma_min = 0.0;
  int n_roots = 0;
  double err_est = 0.0;
  bool converged = true;  // false when doubling T moved the value by more than 10%
  double weight_a = 0.0;  // weight exponent: (Re s)^{1+a}
};

/// Vertical period 2 pi / log 2 of disk-lift symbols.
double disk_lift_period();

struct StripConfig {
  double T = 0.0;           // box half-height; 0 selects 50 periods for disk types, 200 otherwise
  double sigma_min = 1e-3;  // left edge of the search box
  bool estimate_error = true;
  RootFindConfig roots{};
};

/// Upper bound on Re s over the preimages of w (coefficient tail bound, capped at 20).
/// Returns a negative value when no preimage can exist in Re s >= sigma_min.
double preimage_sigma_max(const Symbol& sym, cplx w, double sigma_min);

/// Roots of psi(s) = w in the box, polished to |psi(s) - w| <= 1e-10.
std::vector<Root> enumerate_preimages(const Symbol& sym, cplx w, const Rect& box,
                                      const RootFindConfig& cfg = {});

/// (pi/T) sum Re s over preimages in (sigma_min, sigma_max] x (-T, T).
CountingSample mean_counting(const Symbol& sym, cplx w, const StripConfig& cfg = {});
/// Weighted variant with (Re s)^{1+a}.
CountingSample weighted_mean_counting(const Symbol& sym, cplx w, double a, const StripConfig& cfg = {});

/// Exact counting for disk-type symbols: sum over disk preimages z of log(1/|z|).
CountingSample mean_counting_exact_disk(const Symbol& sym, cplx w);
/// Exact weighted counting: sum (log 1/|z|)^{1+a} (log 2)^{-a}.
CountingSample weighted_mean_counting_exact_disk(const Symbol& sym, cplx w, double a);

/// Best available evaluation: exact for disk types, strip enumeration otherwise.
/// Returns 0 at points where the counting function vanishes identically, and at
/// w = phi(+inf) returns +inf.
double counting_value(const Symbol& sym, cplx w, double a = 0.0);

/// pi log |(phi(+inf) + conj(w) - 1) / (phi(+inf) - w)|.
double littlewood_bound(const Symbol& sym, cplx w);

/// sum over preimages of w under psi_chi with |Im s| <= 1 of Re s (c0 >= 1).
CountingSample restricted_nevanlinna(const Symbol& sym, const Character& chi, cplx w,
                                     double sigma_min = 1e-4);

struct LindelofResult {
  double lhs = 0.0;  // sum over preimages in the box of g_{C_0}(s, z0)
  double rhs = 0.0;  // g_{C_{1/2}}(w, phi(z0))
  int n_roots = 0;
  bool holds(double tol) const { return lhs <= rhs + tol; }
};

/// Lindelof principle for the Green's function, summed over preimages of w in
/// (sigma_min, sigma_max] x (-T, T).
LindelofResult lindelof_check(const Symbol& sym, cplx w, cplx z0, const StripConfig& cfg = {});

struct SubmeanResult {
  double center = 0.0;
  double average = 0.0;
  double quad_err = 0.0;
};

/// M(w) versus its area average over the disk D(w, r).
SubmeanResult submean_check(const Symbol& sym, cplx w, double r, int order = 24);

/// Heatmap over a rectangular grid of w values.
struct GridSpec {
  double re_min = 0.5, re_max = 2.0, im_min = -1.0, im_max = 1.0;
  int nx = 32, ny = 32;
  static GridSpec parse(const std::string& text);  // "reMin,reMax,imMin,imMax,nx,ny"
};

std::vector<CountingSample> counting_heatmap(const Symbol& sym, const GridSpec& grid, bool force_strip = false,
                                             const StripConfig& cfg = {});

}  // namespace hardylab
