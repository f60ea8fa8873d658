#include "hardylab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hardylab/quadrature.hpp"

namespace hardylab {

namespace {

constexpr double kLog2 = std::numbers::ln2;

void require_not_at_infinity_value(const Symbol& sym, cplx w) {
  if (sym.c0() == 0 && w == sym.phi_at_infinity()) {
    throw PreconditionError("counting: w = phi(+inf) is excluded");
  }
}

double default_T(const Symbol& sym, double T) {
  if (T > 0.0) return T;
  return sym.is_disk_type() ? 50.0 * disk_lift_period() : 200.0;
}

// log|(1+u)/(1-u)| accurate for small u
double log_ratio_one_plus_minus(cplx u) {
  const double n2 = std::norm(u);
  return 0.5 * (std::log1p(2.0 * u.real() + n2) - std::log1p(-2.0 * u.real() + n2));
}

struct StripValue {
  double value = 0.0;
  int n_roots = 0;
};

StripValue strip_value(const Symbol& sym, cplx w, double a, double T, double sigma_min, const RootFindConfig& rc) {
  StripValue out;
  const double smax = preimage_sigma_max(sym, w, sigma_min);
  if (!(smax > sigma_min)) return out;
  const auto roots = enumerate_preimages(sym, w, Rect{sigma_min, smax, -T, T}, rc);
  double acc = 0.0;
  for (const Root& r : roots) {
    acc += r.multiplicity * std::pow(r.z.real(), 1.0 + a);
    out.n_roots += r.multiplicity;
  }
  out.value = std::numbers::pi / T * acc;
  return out;
}

}  // namespace

std::string to_string(CountingMethod m) { return m == CountingMethod::ExactDisk ? "exact_disk" : "strip_enum"; }

double disk_lift_period() { return 2.0 * std::numbers::pi / kLog2; }

double preimage_sigma_max(const Symbol& sym, cplx w, double sigma_min) {
  constexpr double kCap = 20.0;
  if (sym.c0() >= 1) {
    if (!(w.real() > 0.0)) return -1.0;
    return w.real() / sym.c0() + 0.01 * (1.0 + w.real());
  }
  const double d = std::abs(w - sym.phi_at_infinity());
  if (sym.deviation_bound(sigma_min) < d) return -1.0;
  if (sym.deviation_bound(kCap) >= d) return kCap;
  double lo = sigma_min;
  double hi = kCap;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sym.deviation_bound(mid) >= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // small outward pad so that a preimage on the bound is not on the contour
  return std::min(kCap, hi * (1.0 + 1e-6) + 1e-9);
}

std::vector<Root> enumerate_preimages(const Symbol& sym, cplx w, const Rect& box, const RootFindConfig& cfg) {
  require_not_at_infinity_value(sym, w);
  if (!(box.x0 > 0.0)) throw PreconditionError("enumerate_preimages: box must lie in Re s > 0");
  const AnalyticFn f = [&](cplx s) { return sym.psi(s) - w; };
  const AnalyticFn df = [&](cplx s) { return sym.psi_deriv(s); };
  return find_zeros(f, df, box, cfg);
}

CountingSample weighted_mean_counting(const Symbol& sym, cplx w, double a, const StripConfig& cfg) {
  if (!(a >= 0.0)) throw PreconditionError("weighted_mean_counting: a must be >= 0");
  if (!(cfg.sigma_min > 0.0)) throw PreconditionError("mean_counting: sigma_min must be > 0");
  require_not_at_infinity_value(sym, w);
  CountingSample out;
  out.w = w;
  out.method = CountingMethod::StripEnum;
  out.T = default_T(sym, cfg.T);
  out.sigma_min = cfg.sigma_min;
  out.weight_a = a;
  if (sym.c0() == 0 && !(w.real() > 0.5)) return out;

  const StripValue base = strip_value(sym, w, a, out.T, cfg.sigma_min, cfg.roots);
  out.value = base.value;
  out.n_roots = base.n_roots;
  if (cfg.estimate_error) {
    const StripValue longer = strip_value(sym, w, a, 2.0 * out.T, cfg.sigma_min, cfg.roots);
    const StripValue deeper = strip_value(sym, w, a, out.T, 0.5 * cfg.sigma_min, cfg.roots);
    const double dT = std::abs(longer.value - base.value);
    out.err_est = std::max(dT, std::abs(deeper.value - base.value));
    out.converged = dT <= 0.1 * std::abs(base.value) + 1e-14;
  }
  return out;
}

CountingSample mean_counting(const Symbol& sym, cplx w, const StripConfig& cfg) {
  return weighted_mean_counting(sym, w, 0.0, cfg);
}

CountingSample weighted_mean_counting_exact_disk(const Symbol& sym, cplx w, double a) {
  if (!sym.is_disk_type()) throw PreconditionError("mean_counting_exact_disk: requires a disk-type symbol");
  if (!(a >= 0.0)) throw PreconditionError("weighted_mean_counting: a must be >= 0");
  require_not_at_infinity_value(sym, w);
  CountingSample out;
  out.w = w;
  out.method = CountingMethod::ExactDisk;
  out.weight_a = a;
  const double norm = std::pow(kLog2, -a);

  if (const auto* s = std::get_if<SectorLiftDesc>(&sym.descriptor())) {
    const cplx v = w - 0.5;
    if (v == cplx(0.0, 0.0) || !(std::abs(std::arg(v)) < std::numbers::pi / (2.0 * s->alpha))) return out;
    const cplx u = std::pow(v, s->alpha);
    const double m = log_ratio_one_plus_minus(u);
    out.value = std::pow(m, 1.0 + a) * norm;
    out.n_roots = 1;
    out.err_est = 1e-14 * (1.0 + out.value);
    return out;
  }

  const Polynomial p = sym.disk_polynomial();
  if (p.degree() < 1) return out;
  const auto roots = solve_polynomial(p, w);
  for (const cplx& z : roots) {
    const double r = std::abs(z);
    if (r < 1.0) {
      out.value += std::pow(-std::log(r), 1.0 + a) * norm;
      ++out.n_roots;
    }
  }
  out.err_est = 1e-10 * out.n_roots;
  return out;
}

CountingSample mean_counting_exact_disk(const Symbol& sym, cplx w) {
  return weighted_mean_counting_exact_disk(sym, w, 0.0);
}

double counting_value(const Symbol& sym, cplx w, double a) {
  if (sym.c0() != 0) throw PreconditionError("counting_value: requires c0 = 0");
  if (!(w.real() > 0.5)) return 0.0;
  if (w == sym.phi_at_infinity()) return std::numeric_limits<double>::infinity();
  if (sym.is_disk_type()) return weighted_mean_counting_exact_disk(sym, w, a).value;
  StripConfig cfg;
  cfg.estimate_error = false;
  return weighted_mean_counting(sym, w, a, cfg).value;
}

double littlewood_bound(const Symbol& sym, cplx w) {
  const cplx a = sym.phi_at_infinity();
  if (w == a) return std::numeric_limits<double>::infinity();
  return std::numbers::pi * std::log(std::abs((a + std::conj(w) - 1.0) / (a - w)));
}

CountingSample restricted_nevanlinna(const Symbol& sym, const Character& chi, cplx w, double sigma_min) {
  if (sym.c0() < 1) throw PreconditionError("restricted_nevanlinna: requires c0 >= 1");
  if (!(w.real() > 0.0) || w.real() > sym.c0()) {
    throw PreconditionError("restricted_nevanlinna: requires 0 < Re w <= c0");
  }
  CountingSample out;
  out.w = w;
  out.method = CountingMethod::StripEnum;
  out.T = 1.0;
  out.sigma_min = sigma_min;
  const double smax = preimage_sigma_max(sym, w, sigma_min);
  if (!(smax > sigma_min)) return out;
  const DirichletSeries phi_chi = twist(sym.phi_series(std::max<std::size_t>(1, sym.stored_series().size())), chi);
  const DirichletSeries dphi_chi = derivative(phi_chi);
  const double c0 = sym.c0();
  const AnalyticFn f = [&](cplx s) { return c0 * s + evaluate(phi_chi, s) - w; };
  const AnalyticFn df = [&](cplx s) { return c0 + evaluate(dphi_chi, s); };
  const auto roots = find_zeros(f, df, Rect{sigma_min, smax, -1.0, 1.0});
  for (const Root& r : roots) {
    out.value += r.multiplicity * r.z.real();
    out.n_roots += r.multiplicity;
  }
  return out;
}

LindelofResult lindelof_check(const Symbol& sym, cplx w, cplx z0, const StripConfig& cfg) {
  if (sym.c0() != 0) throw PreconditionError("lindelof_check: requires c0 = 0");
  if (!(z0.real() > 0.0)) throw PreconditionError("lindelof_check: z0 must lie in C_0");
  LindelofResult out;
  const cplx image = sym.phi(z0);
  if (image == w) {
    out.rhs = std::numeric_limits<double>::infinity();
    return out;
  }
  out.rhs = green(GreenDomain::half_plane(0.5), w, image);
  const double T = default_T(sym, cfg.T);
  const double smax = preimage_sigma_max(sym, w, cfg.sigma_min);
  if (!(smax > cfg.sigma_min)) return out;
  const auto roots = enumerate_preimages(sym, w, Rect{cfg.sigma_min, smax, -T, T}, cfg.roots);
  const GreenDomain c0 = GreenDomain::half_plane(0.0);
  for (const Root& r : roots) {
    if (r.z == z0) {
      out.lhs = std::numeric_limits<double>::infinity();
      continue;
    }
    out.lhs += r.multiplicity * green(c0, r.z, z0);
    out.n_roots += r.multiplicity;
  }
  return out;
}

SubmeanResult submean_check(const Symbol& sym, cplx w, double r, int order) {
  if (!(r > 0.0) || !(w.real() - r > 0.5)) throw PreconditionError("submean_check: disk must lie in C_{1/2}");
  if (std::abs(sym.phi_at_infinity() - w) <= r) {
    throw PreconditionError("submean_check: disk must avoid phi(+inf)");
  }
  auto average = [&](int n) {
    const GaussRule g = gauss_legendre(n);
    const int n_theta = 2 * n;
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double rho = 0.5 * r * (g.nodes[i] + 1.0);
      const double wr = 0.5 * r * g.weights[i] * rho;
      for (int j = 0; j < n_theta; ++j) {
        const double th = 2.0 * std::numbers::pi * (j + 0.5) / n_theta;
        acc += wr * (2.0 * std::numbers::pi / n_theta) * counting_value(sym, w + std::polar(rho, th));
      }
    }
    return acc / (std::numbers::pi * r * r);
  };
  SubmeanResult out;
  out.center = counting_value(sym, w);
  out.average = average(order);
  out.quad_err = std::abs(out.average - average(std::max(4, order / 2)));
  return out;
}

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(item, &pos));
      if (item.find_first_not_of(" \t", pos) != std::string::npos) throw SpecError("trailing characters");
    } catch (const std::exception&) {
      throw SpecError("grid: cannot parse '" + item + "'");
    }
  }
  if (v.size() != 6) throw SpecError("grid: expected reMin,reMax,imMin,imMax,nx,ny");
  GridSpec g{v[0], v[1], v[2], v[3], static_cast<int>(v[4]), static_cast<int>(v[5])};
  if (!(g.re_max > g.re_min) || !(g.im_max > g.im_min) || g.nx < 1 || g.ny < 1 ||
      v[4] != g.nx || v[5] != g.ny) {
    throw SpecError("grid: empty ranges or non-integer counts");
  }
  return g;
}

std::vector<CountingSample> counting_heatmap(const Symbol& sym, const GridSpec& grid, bool force_strip,
                                             const StripConfig& cfg) {
  std::vector<CountingSample> out;
  out.reserve(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny));
  for (int j = 0; j < grid.ny; ++j) {
    const double im = grid.ny == 1 ? grid.im_min : grid.im_min + (grid.im_max - grid.im_min) * j / (grid.ny - 1);
    for (int i = 0; i < grid.nx; ++i) {
      const double re = grid.nx == 1 ? grid.re_min : grid.re_min + (grid.re_max - grid.re_min) * i / (grid.nx - 1);
      const cplx w(re, im);
      CountingSample s;
      s.w = w;
      if (w == sym.phi_at_infinity()) {
        s.value = std::numeric_limits<double>::infinity();
        s.method = sym.is_disk_type() && !force_strip ? CountingMethod::ExactDisk : CountingMethod::StripEnum;
      } else if (!(re > 0.5)) {
        s.method = sym.is_disk_type() && !force_strip ? CountingMethod::ExactDisk : CountingMethod::StripEnum;
      } else if (sym.is_disk_type() && !force_strip) {
        s = mean_counting_exact_disk(sym, w);
      } else {
        s = mean_counting(sym, w, cfg);
      }
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace hardylab
