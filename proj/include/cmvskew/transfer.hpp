// One-step and n-step transfer matrices
//
//   A_z(alpha) = (1-|alpha|^2)^{-1/2} [[z, -conj(alpha)], [-alpha z, 1]],
//   T^{[a,b]}(z) = A_z(alpha_b) ... A_z(alpha_a),
//
// kept renormalized (max-abs entry in [1/2, 2]) with the removed magnitude
// accumulated in log_scale, plus the boundary-polynomial evaluations
//
//   (varphi^{[a,b]}_{beta,.), varphi*)^t = T^{[a,b]}(z) (1, conj(beta))^t
//   varphi^{[a,b]}_{beta,gamma} = (z varphi^{[a,b-1]}_{beta,.}
//                                  - conj(gamma) varphi*^{[a,b-1]}_{beta,.}) / rho_b
//
// and the reflected (free-left) variant, and Lyapunov exponent estimation.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "cmvskew/coeffs.hpp"

namespace cmvskew {

struct TransferProduct {
  Eigen::Matrix2cd mat = Eigen::Matrix2cd::Identity();
  double log_scale = 0.0;
  Index steps = 0;

  double log_frobenius() const { return 0.5 * std::log(mat.squaredNorm()) + log_scale; }
};

Eigen::Matrix2cd one_step(const Complex& alpha, const Complex& z);

// later * earlier with scale recombination.
TransferProduct compose(const TransferProduct& later, const TransferProduct& earlier);

TransferProduct forward_product(const VerblunskySource& src, Index a, Index b, const Complex& z);

// T_{x;-n}(z) for n = -a_neg >= 0 over coefficient indices a_neg..-1:
//   diag(-1/z, 1) A(-conj(alpha_{-1})) ... A(-conj(alpha_{-n})) diag(-z, 1).
TransferProduct backward_product(const VerblunskySource& src, Index a_neg, const Complex& z);

// Scaled values of the normalized boundary polynomials at a point z.
struct PhiPairValue {
  Complex phi, phi_star;  // true values are these times exp(log_scale)
  double log_scale = 0.0;

  double log_abs_phi() const { return std::log(std::abs(phi)) + log_scale; }
};

// varphi^{[a,b]}_{beta, free}; empty window (b = a-1) gives the seed (1, conj(beta)).
PhiPairValue varphi_fixed_left(const VerblunskySource& src, Index a, Index b, const Complex& beta,
                               const Complex& z);
// varphi^{[a,b]}_{beta, gamma}, both boundaries fixed.
PhiPairValue varphi_fixed_both(const VerblunskySource& src, Index a, Index b, const Complex& beta,
                               const Complex& gamma, const Complex& z);
// varphi^{[a,b]}_{free, gamma} via the reflected family alpha'_j = -conj(alpha_{b-1-j}).
PhiPairValue varphi_fixed_right(const VerblunskySource& src, Index a, Index b, const Complex& gamma,
                                const Complex& z);

using SourceFamily = std::function<VerblunskySource(const TorusPoint&)>;

// Average of (1/n) log ||T_{x;n}(z)||_F over a uniform lattice with
// grid_per_dim points per torus coordinate; deterministic ordered reduction.
double lyapunov_estimate(const SourceFamily& family, int k, const Complex& z, Index n,
                         int grid_per_dim);

// Running sequence (1/m) log ||T_{x;m}(z)||_F for m = 1..n.
std::vector<double> lyapunov_pointwise(const VerblunskySource& src, const Complex& z, Index n);

// gamma(z) = -1/2 log(1 - |lambda|^2), the Lyapunov value on the unit circle.
inline double lyapunov_theory(double abs_lambda) {
  return -0.5 * std::log(1.0 - abs_lambda * abs_lambda);
}

}  // namespace cmvskew
