// Green's function G^{[a,b]}(z; k, l) = <delta_k, (z L* - M)^{-1} delta_l>
// of a finite restriction, by two independent routes:
//
//   green_direct:   tridiagonal LU solve with partial pivoting (zgttrf/s),
//   green_abs_poly: |G| from the boundary characteristic polynomials.
//
// The polynomial route comes from Cramer's rule on the tridiagonal pencil:
// for k <= l,
//
//   |G(k,l)| = prod_{j=k}^{l-1} |A_{j,j+1}| * |det A^{[a,k-1]}| |det A^{[l+1,b]}|
//              / |det A^{[a,b]}|
//
// and each sub-window pencil determinant equals (up to a unimodular factor)
// the plain or reversed characteristic polynomial of the matching one-sided
// restriction: the top block gives Phi*^{[a,k-1]}_{beta,.} when k-1 is even
// and Phi^{[a,k-1]}_{beta,.} when odd; the bottom block gives
// Phi^{[l+1,b]}_{.,gamma} when l+1 is even and its reversal when odd. In the
// normalized varphi variables the rho bookkeeping telescopes to a single
// 1/rho_b, giving (valid for all z, not just the unit circle)
//
//   log|G| = #\{even j in [k,l-1]\} log|z| + log|phihat_1| + log|phihat_2|
//            - log|varphi^{[a,b]}_{beta,gamma}| - log rho_b.
#pragma once

#include <optional>
#include <vector>

#include "cmvskew/szego.hpp"
#include "cmvskew/transfer.hpp"

namespace cmvskew {

inline constexpr double kCondUntrusted = 1e12;

struct GreenQuery {
  CMVRestriction restriction;
  Complex z;
  Index k = 0, l = 0;
};

class SingularPencilError : public std::runtime_error {
 public:
  SingularPencilError(const std::string& msg, double cond)
      : std::runtime_error(msg), cond_estimate(cond) {}
  double cond_estimate;
};

// Factorized pencil at a point; solves share the factorization.
class PencilSolver {
 public:
  PencilSolver(const CMVRestriction& r, const Complex& z);

  // Column (G(n, l))_{n=a..b}.
  std::vector<Complex> column(Index l) const;
  Complex entry(Index k, Index l) const;

  double cond_estimate() const { return cond_; }
  bool trusted() const { return cond_ < kCondUntrusted; }

 private:
  Index a_, b_;
  std::vector<Complex> dl_, d_, du_, du2_;
  std::vector<int> ipiv_;
  double cond_ = 0.0;
};

Complex green_direct(const GreenQuery& q);

struct GreenRecord {
  Complex value;
  double cond_estimate;
  bool trusted;
};
GreenRecord green_query(const GreenQuery& q);

// |G| through the boundary polynomials; requires fixed boundaries and
// a <= k <= l <= b.
double green_abs_poly(const GreenQuery& q);

// psi(n) over the window from a line solution's boundary values and outside
// neighbors: psi(n) = G(n,a) c_a + G(n,b) c_b with
//   c_a = (s_{a-1} - alpha_{a-1}) psi(a) + rho_{a-1} psi(a-1)            (a even)
//       = -z (conj(s_{a-1}) - conj(alpha_{a-1})) psi(a) - z rho_{a-1} psi(a-1)  (a odd)
//   c_b = z (s_b - alpha_b) psi(b) - z rho_b psi(b+1)                    (b even)
//       = -(conj(s_b) - conj(alpha_b)) psi(b) + rho_b psi(b+1)           (b odd)
// where s are the window's substituted slot values and alpha/rho the source
// values the line solution actually sees.
std::vector<Complex> reconstruct_interior(const CMVRestriction& r, const Complex& z,
                                          const Complex& psi_a, const Complex& psi_a_minus_1,
                                          const Complex& psi_b, const Complex& psi_b_plus_1);

struct DecayScanRecord {
  Index k = 0;
  Complex left_slot, right_slot;  // best boundary-sign choice
  double max_abs_green = 0.0;     // max |G(l, k+-M)| over |k-l| <= M/2
  bool pass = false;              // max_abs_green <= 1/M
  double max_over_exp_bound = 0.0;  // max |G(l, k+-M)| / e^{-m |l - (k+-M)|}
  bool exp_pass = false;
};

struct DecayScanReport {
  Index window_half_width = 0;  // M
  std::vector<DecayScanRecord> records;
  std::vector<Index> passing;
};

// Scan k in [L/3, 2L/3] and its mirror image; at each k try the four
// boundary-sign choices (+-beta0, +-gamma0) with beta0, gamma0 the
// phase-locked slots alpha_n/|alpha_n| at the window edges.
DecayScanReport decay_scan(const VerblunskySource& src, const Complex& z, Index L, Index M,
                           double decay_rate);

}  // namespace cmvskew
