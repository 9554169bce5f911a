// Exponential sums, Selberg box majorants, skew-shift recurrence counting,
// and continued-fraction Diophantine diagnostics.
#pragma once

#include <Eigen/Dense>

#include "cmvskew/coeffs.hpp"

namespace cmvskew {

// sum_{l=1}^{L} e(l omega), compensated summation.
Complex weyl_linear(double omega, Index L);

// sum_{l=1}^{L} e(t l + omega l^2), compensated summation.
Complex weyl_quadratic(double t, double omega, Index L);

struct BoxSpec {
  double eps;   // x half-width, in (0, 1/2)
  double delta; // y half-width, in (0, 1/2)
  double cx = 0.0, cy = 0.0;  // box center

  BoxSpec(double e, double d, double cx_ = 0.0, double cy_ = 0.0);
  bool contains(double x, double y) const {
    return dist_to_int(x - cx) <= eps && dist_to_int(y - cy) <= delta;
  }
};

// Tensor product of the Vaaler/Selberg interval majorants: a real trig
// polynomial P(x,y) = sum_{|j|<=jmax,|k|<=kmax} P_{j,k} e(jx + ky) with
// P >= indicator of the centered box, degrees floor(2/eps), floor(2/delta),
// and mean value (2 eps + 1/(jmax+1))(2 delta + 1/(kmax+1)).
struct SelbergMajorant {
  int jmax = 0, kmax = 0;
  std::vector<double> sx, sy;  // 1-D coefficient profiles s(j), j = 0..jmax (even)

  Complex coeff(int j, int k) const;
  double eval(double x, double y) const;
  double max_abs_coeff() const;
};

SelbergMajorant selberg_majorant(const BoxSpec& b);

struct BoxVisits {
  Index count = 0;        // visits along the best arithmetic progression
  Index best_offset = 0;  // l0 minimizing the count
  Index total = 0;        // visits over the whole orbit segment
};

// #{0 <= l <= L/N : T^{lN + l0}(x,y) in B} minimized over l0 in [0, N);
// k = 2 skew-shift, direct orbit run.
BoxVisits box_visits(const SkewShiftParams& p, const TorusPoint& xy, const BoxSpec& b, Index L,
                     Index stride);

// min_{1 <= q <= qmax} q^tau ||q omega||, evaluated over continued-fraction
// convergent denominators (where the minima occur).
double diophantine_constant(double omega, double tau, Index qmax);

}  // namespace cmvskew
