#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

/// s_n = 1/2 + 2^{-n} + i(n + 1/2).
cplx carleson_point(int n);

struct SchurDemo {
  Eigen::MatrixXcd matrix;          // A_ij = zeta(s_i + conj s_j) / sqrt(zeta(2 Re s_i) zeta(2 Re s_j)), 1-based i, j
  std::vector<double> row_sums;     // sum_j |A_ij|
  double sup = 0.0;
  std::vector<double> ratios;       // zeta(2 Re s_i) / zeta(2 Re s_{i+1})
  int i0 = 1;                       // ratios[i] <= b for all i >= i0
  double b = 0.0;
  double decay_constant = 0.0;      // max_{i != j} |A_ij| / b^{|i-j|/2}
};

/// Schur-test matrix of the sequence s_1..s_{n_max}; n_max <= 40.
SchurDemo carleson_schur_demo(int n_max, double b_target = 0.75);

struct WeightedPoint {
  cplx w;
  double mass;
};

struct BoxConstant {
  double sup = 0.0;
  std::vector<double> aligned;   // mu(Q)/|I| for the box centred at each point, side 2 (Re w - 1/2)
  cplx argsup{0.0, 0.0};         // centre of the maximizing box
  double side_at_sup = 0.0;
};

/// mu(Q)/|I| for the box Q = [1/2, 1/2 + h] x [y - h/2, y + h/2].
double box_ratio(const std::vector<WeightedPoint>& mu, double y, double h);

/// sup of mu(Q)/|I| over the boxes centred at each point with side 2 (Re w - 1/2), and
/// the dyadic boxes h = 2^{-k} (k = k_min..k_max) centred at those points' imaginary parts.
BoxConstant carleson_box_constant(const std::vector<WeightedPoint>& mu, int k_min = -2, int k_max = 12);

}  // namespace hardylab
