// Finite restrictions of extended CMV operators.
//
// A restriction on the window [a,b] carries effective coefficients
// alpha~_n for n in [a-1, b]. Fixed boundary conditions substitute
//
//     left  = fixed(beta)  :  alpha~_{a-1} = -conj(beta)
//     right = fixed(gamma) :  alpha~_b     =  gamma
//
// and free keeps the source value. The sign/conjugation at the left slot is
// what makes det(z - E^{[0,n-1]}_{1,free}) equal the Szego polynomial Phi_n
// and makes E^{[0,n-1]}_{1,free} the upper-left block of the half-line CMV
// matrix (the slot value is then -1, giving the +1 corner of the M factor).
//
// Worked 4x4 example, window [0,3], left fixed(beta), right fixed(gamma),
// s = -conj(beta):
//
//   L = [ conj(a0)  r0        .         .       ]   M = [ -s   .         .        .  ]
//       [ r0       -a0        .         .       ]       [  .   conj(a1)  r1       .  ]
//       [ .         .         conj(a2)  r2      ]       [  .   r1       -a1       .  ]
//       [ .         .         r2       -a2      ]       [  .   .         .   conj(g) ]
//
//   E = L * M  (five-diagonal; unitary when both boundaries are fixed).
//
// The spectral pencil A(z) = z L* - M is tridiagonal with entries indexed by
// the absolute position j (parity matters):
//
//   A_jj     = z a~_j + a~_{j-1}                 (j even)
//            = -z conj(a~_{j-1}) - conj(a~_j)    (j odd)
//   A_j,j+1  = A_j+1,j = z r~_j (j even),  -r~_j (j odd).
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cmvskew/coeffs.hpp"

namespace cmvskew {

inline constexpr double kUnimodularTol = 1e-14;
inline constexpr Index kDenseWindowCap = 8192;

// 2x2 block Theta(alpha) = [[conj(alpha), rho], [rho, -alpha]].
Eigen::Matrix2cd theta_block(const Complex& alpha);

class BoundaryCondition {
 public:
  static BoundaryCondition free() { return BoundaryCondition(); }
  static BoundaryCondition fixed(Complex beta);

  bool is_fixed() const { return fixed_; }
  Complex value() const { return value_; }

 private:
  BoundaryCondition() = default;
  bool fixed_ = false;
  Complex value_{0.0, 0.0};
};

class CMVRestriction {
 public:
  static CMVRestriction build(VerblunskySource src, Index a, Index b,
                              BoundaryCondition left, BoundaryCondition right);
  // Direct control of the substituted slot values alpha~_{a-1}, alpha~_b
  // (both unimodular); nullopt keeps the source value (free).
  static CMVRestriction with_slot_values(VerblunskySource src, Index a, Index b,
                                         std::optional<Complex> left_slot,
                                         std::optional<Complex> right_slot);

  Index a() const { return a_; }
  Index b() const { return b_; }
  Index length() const { return b_ - a_ + 1; }
  const VerblunskySource& source() const { return src_; }
  const BoundaryCondition& left() const { return left_; }
  const BoundaryCondition& right() const { return right_; }
  bool fixed_both() const { return left_.is_fixed() && right_.is_fixed(); }

  // Effective coefficient at n in [a-1, b] (slots substituted).
  Complex alpha_tilde(Index n) const;
  double rho_tilde(Index n) const { return rho_of(alpha_tilde(n)); }

  Complex left_slot() const { return alpha_tilde(a_ - 1); }
  Complex right_slot() const { return alpha_tilde(b_); }

 private:
  CMVRestriction() = default;
  Index a_ = 0, b_ = 0;
  VerblunskySource src_ = VerblunskySource::constant(Complex(0, 0));
  BoundaryCondition left_ = BoundaryCondition::free();
  BoundaryCondition right_ = BoundaryCondition::free();
  std::vector<Complex> alphas_;  // materialized over [a-1, b]
};

// Restricted factors (L, M) on the window; E = L * M.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> dense_factors(const CMVRestriction& r);

// Five-diagonal matrix of the restriction.
Eigen::MatrixXcd dense_matrix(const CMVRestriction& r);

struct Pencil {
  std::vector<Complex> diag;     // A_jj, j = a..b
  std::vector<Complex> offdiag;  // A_{j,j+1}, j = a..b-1
  Complex z;
  Index a = 0, b = 0;

  Eigen::MatrixXcd dense() const;
};

// A = z L* - M entries per the table above.
Pencil pencil_at(const CMVRestriction& r, const Complex& z);

// Gauge weights of the rotation lemma: u_n = u_{n-1} e(-(n-1)x - y) for n
// even, u_{n-1} e((n-1)x + y) for n odd; returns (u_a, ..., u_b).
std::vector<Complex> gauge_sequence(double x, double y, Index a, Index b, Complex u_a);

// Max-norm residual of (z~ L~* - M~) U = V (z L* - M) where the tilde
// restriction carries slot-level rotated coefficients alpha~'_n = e(nx+y)
// alpha~_n and z~ = e(-x) z. Requires fixed boundaries.
double verify_gauge(const CMVRestriction& r, double x, double y, const Complex& z);

// The rotated restriction itself (slot-level rotation), for spectrum tests.
CMVRestriction rotate_restriction(const CMVRestriction& r, double x, double y);

}  // namespace cmvskew
