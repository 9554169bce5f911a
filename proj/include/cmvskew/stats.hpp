// Eigenvalue angle statistics: gap vectors, Laplace functionals, comparison
// against an irrational rotation, Wegner-type spectral averaging, and
// quasimode construction from Green-decay windows.
#pragma once

#include <functional>

#include "cmvskew/green.hpp"

namespace cmvskew {

struct AngleSet {
  std::vector<double> angles;  // strictly sorted in [0,1) after 1e-12 dedup
  double unimodularity_residual = 0.0;

  Index size() const { return static_cast<Index>(angles.size()); }
};

AngleSet angle_set_from(std::vector<double> raw);

// Eigenvalue arguments of the (fixed/fixed, unitary) restriction, sorted to
// [0,1). Throws if any |eigenvalue| strays from 1 by more than 1e-8.
AngleSet spectrum_angles(const CMVRestriction& r);

struct GapVector {
  std::vector<double> gaps;        // g_j = theta_{j+1} - theta_j, wrap gap last
  std::vector<double> normalized;  // N g_j
};

GapVector gap_vector(const AngleSet& a);

// {n eta mod 1}_{n=1..N}, sorted.
AngleSet rotation_angles(double eta, Index N);

// Histogram of nonnegative values with fixed bin width; counts[i] covers
// [i w, (i+1) w).
std::vector<Index> histogram(const std::vector<double>& values, double bin_width);

// Kolmogorov-Smirnov distance of the values to the Exp(1) distribution.
double ks_distance_exp1(std::vector<double> values);

struct LaplaceSpec {
  std::function<double(double)> f;  // continuous, >= 0, supported in [-c, c]
  double support_radius = 1.0;
  int resolution = 32;  // quadrature points per mean gap

  static LaplaceSpec hat(int resolution = 32);
};

// L(f) = int_T exp(-sum_n f(N x_n(theta))) dtheta with x_n(theta) =
// x_n - theta reduced to [-1/2, 1/2); uniform grid of resolution*N points.
double laplace_functional(const AngleSet& points, const LaplaceSpec& spec);

double laplace_compare(const AngleSet& a, const AngleSet& b, const LaplaceSpec& spec);

struct RotationMatch {
  double vartheta = 0.0;
  double matched_fraction = 0.0;
  double tolerance_used = 0.0;
};

// Compare the angle set against the rigid set {vartheta - 2 n omega}: sorted
// circular alignment, vartheta estimated per alignment by the circular mean
// of the pair differences, fraction matched within 10/N.
RotationMatch match_to_rotation(const AngleSet& a, double omega);

// Average over a grid in the x_{k-1} coordinate of (1/n) tr P_[t1,t2]
// E^{[0,n-1]} with boundary slots phase-locked to alpha_{-1} and alpha_{n-1}.
double wegner_average(const SkewShiftParams& p, const TorusPoint& base, Index n, double theta1,
                      double theta2, int grid_points, const Complex& beta0 = Complex(1, 0),
                      const Complex& gamma0 = Complex(1, 0));

struct Quasimode {
  Complex z;
  std::vector<Complex> psi;  // over [lo, hi], unit norm
  Index lo = 0, hi = 0;
  Index k_minus = 0, k_plus = 0;
  double residual = 0.0;          // ||(E - z) psi_trunc|| on the [-L, L] window
  double center_mass = 0.0;       // |psi(0)|^2 of the untruncated eigenvector
};

// Eigenpair of E^{[-L,L]} with |psi(0)|^2 >= 1/(2L+1) (pigeonhole), truncated
// to the Green-decay window [k-, k+] and renormalized.
Quasimode quasimode(const VerblunskySource& src, Index L, Index M);

}  // namespace cmvskew
