#include "hardylab/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>

#include "hardylab/counting.hpp"

namespace hardylab {

namespace {

GaussRule compute_gauss(int n) {
  GaussRule g;
  g.nodes.resize(static_cast<std::size_t>(n));
  g.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    g.nodes[static_cast<std::size_t>(i)] = x;
    g.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

using PointEval = std::function<std::pair<double, double>(cplx)>;  // (m, integrand)

struct CellResult {
  Rect box;
  double q_hi = 0.0;
  double err = 0.0;
  double mass = 0.0;
  std::vector<QuadNode> nodes;
};

CellResult eval_cell(const PointEval& eval, const Rect& box, int order, bool keep_nodes) {
  const GaussRule& hi = gauss_legendre(order);
  const GaussRule& lo = gauss_legendre(std::max(2, order - 3));
  const double hx = 0.5 * box.width();
  const double hy = 0.5 * box.height();
  const double cx = 0.5 * (box.x0 + box.x1);
  const double cy = 0.5 * (box.y0 + box.y1);
  CellResult r;
  r.box = box;
  if (keep_nodes) r.nodes.reserve(hi.nodes.size() * hi.nodes.size());
  for (std::size_t i = 0; i < hi.nodes.size(); ++i) {
    for (std::size_t j = 0; j < hi.nodes.size(); ++j) {
      const cplx w(cx + hx * hi.nodes[i], cy + hy * hi.nodes[j]);
      const double dA = hx * hy * hi.weights[i] * hi.weights[j];
      const auto [m, v] = eval(w);
      r.q_hi += dA * v;
      r.mass += dA * m;
      if (keep_nodes) r.nodes.push_back({w, dA, m});
    }
  }
  double q_lo = 0.0;
  for (std::size_t i = 0; i < lo.nodes.size(); ++i) {
    for (std::size_t j = 0; j < lo.nodes.size(); ++j) {
      const cplx w(cx + hx * lo.nodes[i], cy + hy * lo.nodes[j]);
      q_lo += hx * hy * lo.weights[i] * lo.weights[j] * eval(w).second;
    }
  }
  r.err = std::abs(r.q_hi - q_lo);
  if (!std::isfinite(r.err)) r.err = std::numeric_limits<double>::infinity();
  return r;
}

struct AdaptiveResult {
  std::vector<CellResult> cells;
  double value = 0.0;
  double err = 0.0;
  bool converged = false;
};

AdaptiveResult adapt(const PointEval& eval, const std::vector<Rect>& initial, int order, double rel_tol,
                     double abs_tol, int max_cells, bool keep_nodes) {
  AdaptiveResult out;
  std::vector<CellResult> cells;
  cells.reserve(static_cast<std::size_t>(max_cells) + 8);
  auto cmp = [&](std::size_t a, std::size_t b) { return cells[a].err < cells[b].err; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> queue(cmp);
  std::vector<bool> alive;
  double value = 0.0;
  double err = 0.0;
  for (const Rect& b : initial) {
    cells.push_back(eval_cell(eval, b, order, keep_nodes));
    alive.push_back(true);
    value += cells.back().q_hi;
    err += cells.back().err;
    queue.push(cells.size() - 1);
  }
  std::size_t n_alive = cells.size();
  while (!queue.empty()) {
    if (err <= std::max(abs_tol, rel_tol * std::abs(value))) {
      out.converged = true;
      break;
    }
    if (n_alive + 3 > static_cast<std::size_t>(max_cells)) break;
    const std::size_t k = queue.top();
    queue.pop();
    const Rect b = cells[k].box;
    value -= cells[k].q_hi;
    err -= cells[k].err;
    alive[k] = false;
    cells[k].nodes.clear();
    cells[k].nodes.shrink_to_fit();
    --n_alive;
    const double xm = 0.5 * (b.x0 + b.x1);
    const double ym = 0.5 * (b.y0 + b.y1);
    const Rect kids[4] = {{b.x0, xm, b.y0, ym}, {xm, b.x1, b.y0, ym}, {b.x0, xm, ym, b.y1}, {xm, b.x1, ym, b.y1}};
    for (const Rect& kb : kids) {
      cells.push_back(eval_cell(eval, kb, order, keep_nodes));
      alive.push_back(true);
      value += cells.back().q_hi;
      err += cells.back().err;
      queue.push(cells.size() - 1);
      ++n_alive;
    }
  }
  // recompute sums from scratch to shed accumulated rounding
  out.value = 0.0;
  out.err = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!alive[i]) continue;
    out.value += cells[i].q_hi;
    out.err += cells[i].err;
    out.cells.push_back(std::move(cells[i]));
  }
  if (out.err <= std::max(abs_tol, rel_tol * std::abs(out.value))) out.converged = true;
  return out;
}

std::vector<Rect> strip_partition(double re_lo, double re_hi, double im_lo_box, double im_hi_box, int n_strips,
                                  double sector_angle) {
  std::vector<double> xs = {re_lo, re_hi};
  const double L = re_hi - 0.5;
  for (int k = 1; k <= n_strips; ++k) {
    const double x = 0.5 + L * std::ldexp(1.0, -k);
    if (x > re_lo && x < re_hi) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<Rect> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double d = xs[i + 1] - xs[i];
    if (!(d > 0.0)) continue;
    double im_lo = im_lo_box;
    double im_hi = im_hi_box;
    if (sector_angle > 0.0) {
      const double half = (xs[i + 1] - 0.5) * std::tan(sector_angle);
      im_lo = std::max(im_lo, -half);
      im_hi = std::min(im_hi, half);
    }
    const double H = im_hi - im_lo;
    if (!(H > 0.0)) continue;
    const int pieces = std::clamp(static_cast<int>(std::ceil(H / std::max(d, 1e-300))), 1, 16);
    for (int j = 0; j < pieces; ++j) {
      out.push_back({xs[i], xs[i + 1], im_lo + H * j / pieces, im_lo + H * (j + 1) / pieces});
    }
  }
  return out;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 64) throw PreconditionError("gauss_legendre: n must be in [1, 64]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<GaussRule>(compute_gauss(n))).first;
  return *it->second;
}

double MeasureRule::total_mass() const {
  double acc = 0.0;
  for (const QuadCell& c : cells) acc += c.mass;
  return acc;
}

MeasureRule build_measure_rule(const RealFn& counting, const Symbol::Box& box, const Driver& driver,
                               const CubatureConfig& cfg) {
  if (cfg.order < 2 || cfg.max_cells < 4) throw PreconditionError("build_measure_rule: bad config");
  const double re_lo = std::max(box.re_min, 0.5 + cfg.re_floor);
  const double re_hi = std::min(box.re_max, 0.5 + cfg.re_extent);
  MeasureRule rule;
  if (!(re_hi > re_lo) || !(box.im_max > box.im_min)) {
    rule.converged = true;
    return rule;
  }
  const PointEval eval = [&](cplx w) {
    const double m = counting(w);
    if (!(m > 0.0) || !std::isfinite(m)) return std::pair<double, double>(0.0, 0.0);
    return std::pair<double, double>(m, driver(w, m));
  };
  AdaptiveResult res = adapt(eval, strip_partition(re_lo, re_hi, box.im_min, box.im_max, cfg.n_strips, box.sector_angle), cfg.order,
                             cfg.rel_tol, cfg.abs_tol, cfg.max_cells, true);
  rule.driver_value = res.value;
  rule.err_est = res.err;
  rule.converged = res.converged;
  for (CellResult& c : res.cells) {
    rule.cells.push_back({c.box, c.box.width() * c.box.height(), c.mass});
    for (const QuadNode& n : c.nodes) {
      if (n.m > 0.0) rule.nodes.push_back(n);
    }
  }
  return rule;
}

MeasureRule build_measure_rule(const Symbol& sym, const Driver& driver, const CubatureConfig& cfg, double a) {
  if (sym.c0() != 0) throw PreconditionError("build_measure_rule: requires c0 = 0");
  const auto box = sym.range_box(cfg.re_extent);
  if (!box) throw PreconditionError("build_measure_rule: symbol has no bounded range box");
  const RealFn m = [&sym, a](cplx w) { return counting_value(sym, w, a); };
  return build_measure_rule(m, *box, driver, cfg);
}

Integral2D integrate_rect(const RealFn& f, const Rect& box, double rel_tol, int max_cells, int order) {
  const PointEval eval = [&](cplx w) { return std::pair<double, double>(0.0, f(w)); };
  AdaptiveResult res = adapt(eval, {box}, order, rel_tol, 1e-300, max_cells, false);
  return {res.value, res.err, res.converged};
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  const GaussRule& hi = gauss_legendre(12);
  const GaussRule& lo = gauss_legendre(7);
  auto rule = [&](const GaussRule& g, double x0, double x1) {
    const double h = 0.5 * (x1 - x0);
    const double c = 0.5 * (x0 + x1);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) acc += g.weights[i] * f(c + h * g.nodes[i]);
    return acc * h;
  };
  const double scale = std::abs(rule(hi, a, b));
  std::function<double(double, double, int)> rec = [&](double x0, double x1, int depth) -> double {
    const double q_hi = rule(hi, x0, x1);
    const double q_lo = rule(lo, x0, x1);
    if (std::abs(q_hi - q_lo) <= rel_tol * std::max(scale, 1e-300) || depth >= 40) return q_hi;
    const double xm = 0.5 * (x0 + x1);
    return rec(x0, xm, depth + 1) + rec(xm, x1, depth + 1);
  };
  return rec(a, b, 0);
}

}  // namespace hardylab
