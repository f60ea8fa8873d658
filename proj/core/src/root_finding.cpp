#include "hardylab/root_finding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace hardylab {

namespace {

constexpr double kMaxArgStep = std::numbers::pi / 4.0;

double edge_arg_change(const AnalyticFn& f, const AnalyticFn& df, cplx a, cplx b, const RootFindConfig& cfg) {
  const cplx dir = b - a;
  const double len = std::abs(dir);
  if (len == 0.0) return 0.0;
  const double max_dt = std::min(1.0, 0.25 / len);
  double t = 0.0;
  cplx fz = f(a);
  if (std::abs(fz) < cfg.hazard_tol) throw BoundaryHazard("zero on contour");
  double total = 0.0;
  while (t < 1.0) {
    const cplx z = a + t * dir;
    const double dfz = std::abs(df(z));
    double dt = std::min(1.0 - t, max_dt);
    if (dfz > 0.0) dt = std::min(dt, 0.3 * std::abs(fz) / (dfz * len));
    dt = std::max(dt, 1e-14);
    for (;;) {
      const double tn = std::min(1.0, t + dt);
      const cplx fn = f(a + tn * dir);
      const double an = std::abs(fn);
      const double darg = std::arg(fn / fz);
      if (an >= cfg.hazard_tol && std::abs(darg) < kMaxArgStep) {
        total += darg;
        fz = fn;
        t = tn;
        break;
      }
      if (an < cfg.hazard_tol || dt * len < 1e-13) throw BoundaryHazard("zero on contour");
      dt *= 0.5;
    }
  }
  return total;
}

bool newton(const AnalyticFn& f, const AnalyticFn& df, cplx z0, int mult, double tol, cplx& z, double& resid) {
  z = z0;
  for (int it = 0; it < 80; ++it) {
    const cplx fz = f(z);
    if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag())) return false;
    const cplx d = df(z);
    if (d == cplx(0.0, 0.0)) break;
    const cplx step = static_cast<double>(mult) * fz / d;
    z -= step;
    if (std::abs(step) <= 4e-16 * (1.0 + std::abs(z))) break;
    if (std::abs(step) > 1e3) return false;
  }
  resid = std::abs(f(z));
  return std::isfinite(resid) && resid <= tol;
}

struct Searcher {
  const AnalyticFn& f;
  const AnalyticFn& df;
  const RootFindConfig& cfg;
  std::vector<Root> roots;

  void report_cluster(cplx center, int w) {
    cplx z;
    double resid = 0.0;
    if (!newton(f, df, center, w, cfg.newton_tol, z, resid)) {
      z = center;
      resid = std::abs(f(center));
    }
    roots.push_back({z, w, resid});
  }

  void search(const Rect& box, int w, int depth) {
    if (w == 0) return;
    if (w < 0) throw NonConvergence("find_zeros: negative winding number");
    const cplx center((box.x0 + box.x1) / 2.0, (box.y0 + box.y1) / 2.0);
    const double size = std::max(box.width(), box.height());
    if (w == 1) {
      cplx z;
      double resid = 0.0;
      if (newton(f, df, center, 1, cfg.newton_tol, z, resid) && box.contains(z, 1e-12)) {
        roots.push_back({z, 1, resid});
        return;
      }
    }
    if (size < cfg.min_box || depth > 200) {
      report_cluster(center, w);
      return;
    }
    static constexpr std::array<double, 6> kSplits = {0.5, 0.5 + 1.3e-3, 0.5 - 2.9e-3, 0.5 + 7.1e-3, 0.5 - 1.37e-2, 0.53};
    for (double frac : kSplits) {
      Rect a = box;
      Rect b = box;
      if (box.width() >= box.height()) {
        const double xm = box.x0 + frac * box.width();
        a.x1 = xm;
        b.x0 = xm;
      } else {
        const double ym = box.y0 + frac * box.height();
        a.y1 = ym;
        b.y0 = ym;
      }
      int wa = 0;
      int wb = 0;
      try {
        wa = winding_number(f, df, a, cfg);
        wb = winding_number(f, df, b, cfg);
      } catch (const BoundaryHazard&) {
        continue;
      }
      if (wa + wb != w) continue;
      search(a, wa, depth + 1);
      search(b, wb, depth + 1);
      return;
    }
    if (size < 1e3 * cfg.min_box) {
      report_cluster(center, w);
      return;
    }
    throw BoundaryHazard("find_zeros: could not split box without hitting a zero");
  }
};

}  // namespace

int winding_number(const AnalyticFn& f, const AnalyticFn& df, const Rect& box, const RootFindConfig& cfg) {
  const cplx c00(box.x0, box.y0);
  const cplx c10(box.x1, box.y0);
  const cplx c11(box.x1, box.y1);
  const cplx c01(box.x0, box.y1);
  const double total = edge_arg_change(f, df, c00, c10, cfg) + edge_arg_change(f, df, c10, c11, cfg) +
                       edge_arg_change(f, df, c11, c01, cfg) + edge_arg_change(f, df, c01, c00, cfg);
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.2) throw NonConvergence("winding number not near an integer");
  return static_cast<int>(rounded);
}

std::vector<Root> find_zeros(const AnalyticFn& f, const AnalyticFn& df, const Rect& box, const RootFindConfig& cfg,
                             Rect* used_box) {
  if (!(box.width() > 0.0) || !(box.height() > 0.0)) throw PreconditionError("find_zeros: empty box");
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Rect b = box;
    if (attempt > 0) {
      // deterministic jitter, shrinking the box inward so it stays inside the requested region
      const double eps = 1e-7 * std::pow(3.7, attempt);
      b.x0 += eps * 0.61;
      b.x1 -= eps * 0.37;
      b.y0 += eps * 0.83;
      b.y1 -= eps * 0.29;
    }
    try {
      Searcher s{f, df, cfg, {}};
      const int n_chunks = std::max(1, static_cast<int>(std::ceil(b.height() / cfg.chunk_height)));
      const double ch = b.height() / n_chunks;
      // interior chunk edges move on retries; they are free, unlike the outer box
      const double shift = attempt == 0 ? 0.0 : ch * 0.3 * std::fmod(0.618034 * attempt, 1.0);
      auto edge = [&](int k) { return k == 0 ? b.y0 : (k == n_chunks ? b.y1 : b.y0 + k * ch + shift); };
      for (int k = 0; k < n_chunks; ++k) {
        Rect c = b;
        c.y0 = edge(k);
        c.y1 = edge(k + 1);
        s.search(c, winding_number(f, df, c, cfg), 0);
      }
      // merge near-duplicates
      std::vector<Root> merged;
      for (const Root& r : s.roots) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Root& m) { return std::abs(m.z - r.z) < cfg.merge_tol; });
        if (it == merged.end()) {
          merged.push_back(r);
        } else {
          it->multiplicity += r.multiplicity;
        }
      }
      if (used_box) *used_box = b;
      return merged;
    } catch (const BoundaryHazard&) {
      if (attempt == cfg.max_retries) throw;
    }
  }
  return {};
}

}  // namespace hardylab
