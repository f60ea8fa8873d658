#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/dirichlet_series.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/symbol.hpp"

namespace hardylab {

enum class Verdict { FiniteConsistent, DivergentConsistent, Inconclusive };
std::string to_string(Verdict v);

struct CriterionReport {
  std::string name;
  double value = 0.0;                     // last entry of the trace
  bool infinite = false;
  std::vector<double> refinement_trace;   // one value per refinement level
  std::vector<double> levels;             // the refinement parameter of each entry
  Verdict verdict = Verdict::Inconclusive;
  double std_error = 0.0;                 // Monte Carlo estimates only
  std::map<std::string, double> extras;
};

/// finite-consistent: the last successive relative changes are <= 5%, 2%, 1% (the
/// trailing change is compared with 1%), each widened by `noise` when given;
/// divergent-consistent: every successive ratio >= 2; otherwise inconclusive.
Verdict classify_trace(const std::vector<double>& trace, const std::vector<double>& noise = {});

/// Re w >= 1/2 + floor cutoffs used as the refinement ladder: 2^{-3k}, k = 1..4.
std::vector<double> default_floor_ladder();

struct CriterionConfig {
  CubatureConfig cubature{};
  std::vector<double> floors;   // empty: default_floor_ladder()
};

/// int M^p / (Re w - 1/2)^{p+2} dA.
CriterionReport luecking_zhu(const Symbol& sym, double p, const CriterionConfig& cfg = {});

struct S2mConfig {
  CubatureConfig cubature{};
  std::size_t kernel_terms = 0;     // 0: full zeta''; otherwise sum over 2 <= n <= kernel_terms
  std::size_t n_samples = 200000;   // m = 2 pairs
  int n_batches = 20;
  std::uint64_t seed = 1;
  double floor_weight = 0.05;       // share of the proposal spread uniformly over the mass
};

/// m = 1: int zeta''(2 Re w) M dA by quadrature.
/// m = 2: int int |zeta''(conj(w1) + w2)|^2 M(w1) M(w2) dA dA by importance sampling
/// over the nodes of a measure rule, proposal ~ M (Re w - 1/2)^{-3/2}.
CriterionReport multi_integral_s2m(const Symbol& sym, int m, const S2mConfig& cfg = {});
/// Same on a prebuilt measure rule (single level).
CriterionReport multi_integral_s2m(const MeasureRule& rule, int m, const S2mConfig& cfg = {});

/// Weighted Carleson pair: a) M^p / ((Re w - 1/2)^{p+2} (1 + |Im w|)^a),
/// b) M^p (1 + |Im w|)^{a(p-1)} / (Re w - 1/2)^{p+2}.
std::pair<CriterionReport, CriterionReport> weighted_carleson_criterion(const Symbol& sym, double p, double a,
                                                                        const CriterionConfig& cfg = {});

/// int M_{1+a}^{p/2} / (Re w - 1/2)^{(a+1)p/2 + 2} dA with the weighted counting function.
CriterionReport bergman_criterion(const Symbol& sym, double p, double a, const CriterionConfig& cfg = {});

/// int M^p zeta''(2 Re w) (Re w - 1/2)^{1-p} dA: the necessity side tested against the
/// Carleson measure 1_range (Re w - 1/2) dA (bounded imaginary part).
CriterionReport carleson_necessity_probe(const Symbol& sym, double p, const CriterionConfig& cfg = {});

struct RaySpec {
  cplx vertex{0.5, 0.0};
  std::vector<double> angles{0.0};   // direction of w - vertex
  double t_min = 1e-4;
  double t_max = 1e-2;
  int n_points = 16;                 // geometric spacing per ray
};

struct DecayFit {
  double alpha_hat = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

/// Slope of log M against log(Re w - 1/2) along rays from the vertex.
DecayFit sector_decay_fit(const Symbol& sym, const RaySpec& rays = {});

/// int_{eps}^{1} x^{p alpha - p - 2} dx for eps in `cutoffs`: the Luecking-Zhu integrand
/// with M replaced by its vertex majorant x^alpha on a unit-height strip.
CriterionReport majorant_scaling_trace(double alpha, double p, const std::vector<double>& cutoffs = {});

struct EmbeddingCheck {
  double local_lhs = 0.0;     // (1/2T) int_{-T}^{T} |f(1/2 + it)|^2 dt
  double h2_norm_sq = 0.0;
  double bergman_lhs = 0.0;   // (1/2T) int int |f(s)|^2 (Re s - 1/2)^{a-1}, a = 2, f_1 dropped
  double dm2_norm_sq = 0.0;   // sum_{n>=2} |a_n|^2 / (log n)^2
  double ol_lhs = 0.0;        // int_{1/2}^{1} int_0^1 |f'|^2 (sigma - 1/2)^2
  double a2_norm_sq = 0.0;    // sum |a_n|^2 / d(n)
};

EmbeddingCheck embedding_check(const DirichletSeries& f, double T);

}  // namespace hardylab
