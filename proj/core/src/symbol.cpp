#include "hardylab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hardylab/arithmetic.hpp"

namespace hardylab {

namespace {

constexpr double kLog2 = std::numbers::ln2;
constexpr int kMaxDiskDegree = 12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

DirichletSeries place_on_powers_of_two(const std::vector<cplx>& coeffs, std::size_t n_max) {
  DirichletSeries f(n_max);
  std::size_t n = 1;
  for (std::size_t k = 0; k < coeffs.size() && n <= n_max; ++k, n *= 2) f[n] = coeffs[k];
  return f;
}

std::size_t dense_size_for_degree(std::size_t degree) {
  return std::size_t{1} << std::min<std::size_t>(degree, kMaxDiskDegree);
}

// Golden-section refinement of a 1-D minimum bracketed by [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double& x_best) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  x_best = fc < fd ? c : d;
  return std::min(fc, fd);
}

// Sampled + refined minimum of Re P(rho e^{i theta}) over the circle.
struct CircleMin {
  double value;
  double theta;
  double slack;
};

CircleMin circle_min(const Polynomial& p, double rho, int n_theta) {
  const double h = 2.0 * std::numbers::pi / n_theta;
  auto re_at = [&](double th) { return p(std::polar(rho, th)).real(); };
  double best = re_at(0.0);
  int best_j = 0;
  for (int j = 1; j < n_theta; ++j) {
    const double v = re_at(j * h);
    if (v < best) {
      best = v;
      best_j = j;
    }
  }
  double th = best_j * h;
  const double refined = golden_min(re_at, (best_j - 1) * h, (best_j + 1) * h, th);
  double lip = 0.0;
  double rk = rho;
  for (std::size_t k = 1; k < p.c.size(); ++k, rk *= rho) lip += static_cast<double>(k) * std::abs(p.c[k]) * rk;
  return {std::min(best, refined), th, lip * h / 2.0};
}

// Support analysis for generic series: prime-exponent vectors over the first J primes.
struct SupportInfo {
  std::vector<std::size_t> indices;
  std::vector<std::vector<int>> exponents;
  std::size_t n_primes = 0;  // number of leading primes needed
  bool single_prime = false;
  std::uint64_t prime = 0;
};

SupportInfo analyse_support(const DirichletSeries& phi) {
  SupportInfo info;
  const std::size_t n_max = phi.support_max();
  if (n_max < 2) return info;
  const auto spf = smallest_prime_factors(n_max);
  const auto primes = first_primes(primes_needed(n_max) + 1);
  std::vector<std::uint64_t> used;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (phi[n] == cplx(0.0, 0.0)) continue;
    info.indices.push_back(n);
    std::size_t m = n;
    while (m > 1) {
      const std::uint64_t p = spf[m];
      if (std::find(used.begin(), used.end(), p) == used.end()) used.push_back(p);
      m /= p;
    }
  }
  std::uint64_t largest = used.empty() ? 0 : *std::max_element(used.begin(), used.end());
  info.n_primes = static_cast<std::size_t>(std::find(primes.begin(), primes.end(), largest) - primes.begin()) + 1;
  if (used.size() == 1) {
    info.single_prime = true;
    info.prime = used.front();
  }
  for (std::size_t n : info.indices) {
    std::vector<int> e(info.n_primes, 0);
    std::size_t m = n;
    for (std::size_t j = 0; j < info.n_primes; ++j) {
      while (m % primes[j] == 0) {
        m /= primes[j];
        ++e[j];
      }
    }
    info.exponents.push_back(std::move(e));
  }
  return info;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// exact sector map

std::vector<cplx> sector_taylor(double beta, int order) {
  if (order < 0) throw PreconditionError("sector_taylor: order must be >= 0");
  const auto K = static_cast<std::size_t>(order);
  // l(z) = log((1-z)/(1+z)) = -2 sum_{k odd} z^k / k
  std::vector<double> l(K + 1, 0.0);
  for (std::size_t k = 1; k <= K; k += 2) l[k] = -2.0 / static_cast<double>(k);
  std::vector<cplx> h(K + 1, 0.0);
  h[0] = 1.0;
  for (std::size_t k = 1; k <= K; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * l[j] * h[k - j];
    h[k] = beta * acc / static_cast<double>(k);
  }
  return h;
}

cplx sector_map(double alpha, cplx z) {
  const cplx q = (1.0 - z) / (1.0 + z);
  return 0.5 + std::pow(q, 1.0 / alpha);
}

cplx sector_map_deriv(double alpha, cplx z) {
  const double beta = 1.0 / alpha;
  const cplx q = (1.0 - z) / (1.0 + z);
  const cplx dq = -2.0 / ((1.0 + z) * (1.0 + z));
  return beta * std::pow(q, beta - 1.0) * dq;
}

// ---------------------------------------------------------------------------
// Symbol

Symbol::Symbol(int c0, DirichletSeries phi, Descriptor desc)
    : c0_(c0), phi_(std::move(phi)), desc_(std::move(desc)) {
  if (c0 < 0) throw PreconditionError("Symbol: c0 must be a non-negative integer");
}

std::string Symbol::kind() const {
  return std::visit(overloaded{[](const AffineDesc&) { return std::string("affine"); },
                               [](const DiskLiftDesc&) { return std::string("disk_lift"); },
                               [](const SectorLiftDesc&) { return std::string("sector_lift"); },
                               [](const GenericDesc&) { return std::string("generic"); }},
                    desc_);
}

cplx Symbol::phi_at_infinity() const { return phi_[1]; }

bool Symbol::is_disk_type() const noexcept { return !std::holds_alternative<GenericDesc>(desc_); }

Polynomial Symbol::disk_polynomial() const {
  if (const auto* a = std::get_if<AffineDesc>(&desc_)) return Polynomial({a->c, a->r});
  if (const auto* d = std::get_if<DiskLiftDesc>(&desc_)) return d->poly;
  throw PreconditionError("Symbol: no disk polynomial for kind " + kind());
}

DirichletSeries Symbol::phi_series(std::size_t n_max) const {
  if (const auto* a = std::get_if<AffineDesc>(&desc_)) return place_on_powers_of_two({a->c, a->r}, n_max);
  if (const auto* d = std::get_if<DiskLiftDesc>(&desc_)) return place_on_powers_of_two(d->poly.c, n_max);
  if (const auto* s = std::get_if<SectorLiftDesc>(&desc_)) return place_on_powers_of_two(s->taylor, n_max);
  return phi_.resized(n_max);
}

cplx Symbol::disk_map(cplx z) const {
  if (const auto* a = std::get_if<AffineDesc>(&desc_)) return a->c + a->r * z;
  if (const auto* d = std::get_if<DiskLiftDesc>(&desc_)) return d->poly(z);
  if (const auto* s = std::get_if<SectorLiftDesc>(&desc_)) return sector_map(s->alpha, z);
  throw PreconditionError("Symbol: disk_map requires a disk-type symbol");
}

cplx Symbol::disk_map_deriv(cplx z) const {
  if (const auto* a = std::get_if<AffineDesc>(&desc_)) return a->r;
  if (const auto* d = std::get_if<DiskLiftDesc>(&desc_)) return d->poly.deriv(z);
  if (const auto* s = std::get_if<SectorLiftDesc>(&desc_)) return sector_map_deriv(s->alpha, z);
  throw PreconditionError("Symbol: disk_map_deriv requires a disk-type symbol");
}

cplx Symbol::phi(cplx s) const {
  if (is_disk_type()) return disk_map(std::exp(-kLog2 * s));
  return evaluate(phi_, s);
}

cplx Symbol::phi_deriv(cplx s) const {
  if (is_disk_type()) {
    const cplx z = std::exp(-kLog2 * s);
    return -kLog2 * z * disk_map_deriv(z);
  }
  cplx acc = 0.0;
  for (std::size_t n = 2; n <= phi_.size(); ++n) {
    if (phi_[n] == cplx(0.0, 0.0)) continue;
    const double ln = std::log(static_cast<double>(n));
    acc -= phi_[n] * ln * std::exp(-s * ln);
  }
  return acc;
}

cplx Symbol::phi_twisted(const Character& chi, cplx s) const {
  if (is_disk_type()) return disk_map(chi.prime_values()[0] * std::exp(-kLog2 * s));
  return evaluate(twist(phi_, chi), s);
}

double Symbol::sup_re() const {
  if (std::holds_alternative<SectorLiftDesc>(desc_)) return std::numeric_limits<double>::infinity();
  if (is_disk_type()) {
    const Polynomial p = disk_polynomial();
    Polynomial neg = p;
    for (cplx& c : neg.c) c = -c;
    const CircleMin m = circle_min(neg, 1.0, 4096);
    return -m.value + m.slack;
  }
  double acc = phi_[1].real();
  for (std::size_t n = 2; n <= phi_.size(); ++n) acc += std::abs(phi_[n]);
  return acc;
}

double Symbol::deviation_bound(double sigma) const {
  if (const auto* s = std::get_if<SectorLiftDesc>(&desc_)) {
    if (!(sigma > 0.0)) return std::numeric_limits<double>::infinity();
    // max modulus of R - R(0) on |z| = rho, sampled with a Lipschitz allowance
    const double rho = std::exp(-kLog2 * sigma);
    const int n = 512;
    double m = 0.0;
    for (int j = 0; j < n; ++j) {
      m = std::max(m, std::abs(sector_map(s->alpha, std::polar(rho, 2.0 * std::numbers::pi * j / n)) - 1.5));
    }
    const double lip = 2.0 / s->alpha / ((1.0 - rho) * (1.0 - rho)) * rho;
    return m + lip * std::numbers::pi / n;
  }
  if (is_disk_type()) {
    const Polynomial p = disk_polynomial();
    double acc = 0.0;
    for (std::size_t k = 1; k < p.c.size(); ++k) acc += std::abs(p.c[k]) * std::exp(-kLog2 * sigma * static_cast<double>(k));
    return acc;
  }
  double acc = 0.0;
  for (std::size_t n = 2; n <= phi_.size(); ++n) {
    if (phi_[n] != cplx(0.0, 0.0)) acc += std::abs(phi_[n]) * std::exp(-sigma * std::log(static_cast<double>(n)));
  }
  return acc;
}

std::optional<Symbol::Box> Symbol::range_box(double re_extent) const {
  if (const auto* s = std::get_if<SectorLiftDesc>(&desc_)) {
    const double t = std::tan(std::numbers::pi / (2.0 * s->alpha));
    return Box{0.5, 0.5 + re_extent, -re_extent * t, re_extent * t, std::numbers::pi / (2.0 * s->alpha)};
  }
  if (is_disk_type()) {
    const Polynomial p = disk_polynomial();
    const int n = 4096;
    Box b{1e300, -1e300, 1e300, -1e300};
    for (int j = 0; j < n; ++j) {
      const cplx v = p(std::polar(1.0, 2.0 * std::numbers::pi * j / n));
      b.re_min = std::min(b.re_min, v.real());
      b.re_max = std::max(b.re_max, v.real());
      b.im_min = std::min(b.im_min, v.imag());
      b.im_max = std::max(b.im_max, v.imag());
    }
    const double pad = p.lipschitz_unit_disk() * std::numbers::pi / n;
    b.re_min = std::max(0.5, b.re_min - pad);
    b.re_max += pad;
    b.im_min -= pad;
    b.im_max += pad;
    return b;
  }
  if (c0_ != 0) return std::nullopt;
  double dev = 0.0;
  for (std::size_t n = 2; n <= phi_.size(); ++n) dev += std::abs(phi_[n]);
  const cplx a1 = phi_[1];
  return Box{std::max(0.5, a1.real() - dev), a1.real() + dev, a1.imag() - dev, a1.imag() + dev};
}

// ---------------------------------------------------------------------------
// validation

ValidationReport validate_class(const Symbol& sym, const ValidationGrid& grid) {
  if (grid.n_theta < 16 || grid.n_per_prime < 4 || grid.sigma < 0.0) {
    throw PreconditionError("validate_class: invalid grid");
  }
  ValidationReport rep;
  rep.c0 = sym.c0();
  const double bound = sym.c0() == 0 ? 0.5 : 0.0;
  rep.branch = sym.c0() == 0 ? "G0" : "G" + std::to_string(sym.c0());
  const DirichletSeries& phi = sym.stored_series();
  const double rho = std::exp(-kLog2 * grid.sigma);

  auto finish = [&](double inf_re, double slack, cplx witness, const std::string& method) {
    rep.inf_re = inf_re;
    rep.margin = inf_re - bound;
    rep.certified_margin = rep.margin - slack;
    rep.witness = witness;
    rep.method = method;
    rep.valid = rep.margin >= -1e-12;
    return rep;
  };

  // constant symbols, including the phi == i tau branch for c0 >= 1
  const bool constant = sym.is_disk_type() ? false : phi.support_max() <= 1;
  if (constant) {
    const cplx a1 = phi[1];
    if (sym.c0() >= 1 && a1.real() == 0.0) rep.branch = "imaginary-constant";
    finish(a1.real(), 0.0, cplx(grid.sigma, 0.0), "exact");
    if (sym.c0() == 0) rep.valid = rep.margin > 0.0;
    return rep;
  }

  if (const auto* a = std::get_if<AffineDesc>(&sym.descriptor())) {
    const double inf_re = a->c.real() - std::abs(a->r) * rho;
    const double th = std::numbers::pi - std::arg(a->r);
    return finish(inf_re, 0.0, cplx(grid.sigma, -th / kLog2), "exact");
  }
  if (std::holds_alternative<SectorLiftDesc>(sym.descriptor())) {
    // Re R >= 1/2 on the closed disk, with equality only at the vertex z = 1.
    return finish(grid.sigma > 0.0 ? sector_map(std::get<SectorLiftDesc>(sym.descriptor()).alpha, rho).real() : 0.5,
                  0.0, cplx(grid.sigma, 0.0), "exact");
  }
  if (const auto* d = std::get_if<DiskLiftDesc>(&sym.descriptor())) {
    const CircleMin m = circle_min(d->poly, rho, grid.n_theta);
    return finish(m.value, m.slack, cplx(grid.sigma, -m.theta / kLog2), "circle");
  }

  const SupportInfo info = analyse_support(phi);
  if (info.single_prime) {
    // phi = P(p^{-s}) for a polynomial P
    const double lp = std::log(static_cast<double>(info.prime));
    Polynomial p;
    p.c.assign(1, phi[1]);
    for (std::size_t n : info.indices) {
      std::size_t k = 0;
      for (std::size_t m = n; m > 1; m /= info.prime) ++k;
      if (p.c.size() <= k) p.c.resize(k + 1, 0.0);
      p.c[k] = phi[n];
    }
    const double r = std::exp(-lp * grid.sigma);
    const CircleMin m = circle_min(p, r, grid.n_theta);
    return finish(m.value, m.slack, cplx(grid.sigma, -m.theta / lp), "circle");
  }
  if (info.n_primes <= 3) {
    const std::size_t J = info.n_primes;
    const int n = grid.n_per_prime;
    const double h = 2.0 * std::numbers::pi / n;
    std::vector<cplx> amp;
    for (std::size_t n_idx : info.indices) {
      amp.push_back(phi[n_idx] * std::exp(-grid.sigma * std::log(static_cast<double>(n_idx))));
    }
    auto re_at = [&](const std::vector<double>& th) {
      double acc = phi[1].real();
      for (std::size_t i = 0; i < amp.size(); ++i) {
        double ang = 0.0;
        for (std::size_t j = 0; j < J; ++j) ang += info.exponents[i][j] * th[j];
        acc += (amp[i] * std::polar(1.0, ang)).real();
      }
      return acc;
    };
    std::size_t total = 1;
    for (std::size_t j = 0; j < J; ++j) total *= static_cast<std::size_t>(n);
    double best = 1e300;
    std::vector<double> best_th(J, 0.0);
    std::vector<double> th(J, 0.0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      for (std::size_t j = 0; j < J; ++j) {
        th[j] = static_cast<double>(rem % static_cast<std::size_t>(n)) * h;
        rem /= static_cast<std::size_t>(n);
      }
      const double v = re_at(th);
      if (v < best) {
        best = v;
        best_th = th;
      }
    }
    // coordinate-wise golden refinement
    for (int sweep = 0; sweep < 4; ++sweep) {
      for (std::size_t j = 0; j < J; ++j) {
        auto along = [&](double x) {
          auto t = best_th;
          t[j] = x;
          return re_at(t);
        };
        double x = best_th[j];
        const double v = golden_min(along, best_th[j] - h, best_th[j] + h, x);
        if (v < best) {
          best = v;
          best_th[j] = x;
        }
      }
    }
    double lip = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      int deg = 0;
      for (int e : info.exponents[i]) deg += e;
      lip += std::abs(amp[i]) * deg;
    }
    return finish(best, lip * h / 2.0, cplx(grid.sigma, -best_th[0] / kLog2), "torus-grid");
  }

  double dev = 0.0;
  for (std::size_t n_idx : info.indices) dev += std::abs(phi[n_idx]) * std::exp(-grid.sigma * std::log(static_cast<double>(n_idx)));
  return finish(phi[1].real() - dev, 0.0, cplx(grid.sigma, 0.0), "coefficient-bound");
}

namespace {

Symbol checked(Symbol sym, const ValidationGrid& grid) {
  ValidationReport rep = validate_class(sym, grid);
  if (!rep.valid) {
    throw ClassViolation("symbol violates the class condition: inf Re phi = " + fmt_double(rep.inf_re) +
                             " not above " + (sym.c0() == 0 ? "1/2" : "0") + " near s = " +
                             fmt_double(rep.witness.real()) + " + " + fmt_double(rep.witness.imag()) + "i",
                         rep.witness);
  }
  sym.set_report(std::move(rep));
  return sym;
}

}  // namespace

Symbol make_affine(cplx c, cplx r) {
  Symbol sym(0, place_on_powers_of_two({c, r}, 2), AffineDesc{c, r});
  return checked(std::move(sym), {});
}

Symbol make_constant(cplx c) {
  DirichletSeries phi(1);
  phi[1] = c;
  return checked(Symbol(0, std::move(phi), GenericDesc{}), {});
}

Symbol make_disk_lift(const Polynomial& poly, const ValidationGrid& grid) {
  const int deg = poly.degree();
  if (deg < 0) throw PreconditionError("make_disk_lift: zero polynomial");
  if (deg > kMaxDiskDegree) {
    throw PreconditionError("make_disk_lift: degree must be <= " + std::to_string(kMaxDiskDegree));
  }
  Polynomial p(std::vector<cplx>(poly.c.begin(), poly.c.begin() + deg + 1));
  DirichletSeries phi = place_on_powers_of_two(p.c, dense_size_for_degree(static_cast<std::size_t>(deg)));
  return checked(Symbol(0, std::move(phi), DiskLiftDesc{p}), grid);
}

Symbol make_sector_lift(double alpha, int order) {
  if (!(alpha > 1.0)) throw PreconditionError("make_sector_lift: requires alpha > 1");
  if (order < 1 || order > 64) throw PreconditionError("make_sector_lift: order must be in [1, 64]");
  SectorLiftDesc desc;
  desc.alpha = alpha;
  desc.order = order;
  desc.taylor = sector_taylor(1.0 / alpha, order);
  desc.taylor[0] += 0.5;  // R(0) = 3/2

  const double limit = std::numbers::pi / (2.0 * alpha);
  const int n_theta = 4096;
  Polynomial surrogate(desc.taylor);
  bool ok = false;
  for (int step = 0; step <= 50 && !ok; ++step) {
    const double rho = 1.0 - 0.01 * step;
    double worst = 0.0;
    bool inside = true;
    for (int j = 0; j < n_theta && inside; ++j) {
      const cplx v = surrogate(std::polar(rho, 2.0 * std::numbers::pi * j / n_theta)) - 0.5;
      if (!(v.real() > 0.0)) inside = false;
      worst = std::max(worst, std::abs(std::arg(v)));
    }
    if (inside && worst < limit) {
      desc.rho = rho;
      desc.half_angle = worst;
      ok = true;
    }
  }
  if (!ok) throw ClassViolation("make_sector_lift: truncated map escapes the sector for all rho >= 0.5", 0.0);

  DirichletSeries phi = place_on_powers_of_two(desc.taylor, dense_size_for_degree(static_cast<std::size_t>(order)));
  return checked(Symbol(0, std::move(phi), std::move(desc)), {});
}

Symbol make_generic(int c0, const DirichletSeries& phi, const ValidationGrid& grid) {
  return checked(Symbol(c0, phi, GenericDesc{}), grid);
}

}  // namespace hardylab
