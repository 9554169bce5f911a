// Szego recursion Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n*, reversed and
// para-orthogonal polynomials, and characteristic polynomials of CMV
// restrictions in monomial-basis coefficient form.
#pragma once

#include <vector>

#include "cmvskew/cmv.hpp"

namespace cmvskew {

inline constexpr Index kCharPolyCap = 512;

// Coefficient vector c[0..deg], p(z) = sum c[k] z^k.
using PolyCoeffs = std::vector<Complex>;

Complex poly_eval(const PolyCoeffs& c, const Complex& z);

// z^deg * conj(p(1/conj(z))): coefficients reversed and conjugated.
PolyCoeffs reverse_conjugate(const PolyCoeffs& c);

// Roots via the companion matrix.
std::vector<Complex> poly_roots(const PolyCoeffs& c);

struct PolyPair {
  PolyCoeffs phi;       // Phi_n
  PolyCoeffs phi_star;  // Phi_n*
  int degree = 0;
  // phi-normalization: varphi = exp(-log_scale) * Phi, log_scale the summed
  // log rho over the window (source values).
  double log_scale = 0.0;
};

// (Phi_n, Phi_n*) from alpha_0 .. alpha_{n-1}.
PolyPair szego_recurse(const VerblunskySource& src, int n);

// Phi_n(z; beta) = z Phi_{n-1}(z) - conj(beta) Phi_{n-1}*(z), |beta| = 1;
// all roots on the unit circle.
PolyCoeffs paraorthogonal(const VerblunskySource& src, int n, const Complex& beta);

// Szego recursion over the rotated coefficients {beta * alpha_n}, |beta| = 1.
PolyPair aleksandrov_poly(const VerblunskySource& src, int n, const Complex& beta);

// Phi^{[a,b]}(z) = det(z - E^{[a,b]}) for the restriction, with phi_star the
// reversed polynomial and (when normalized) log_scale the rho-product for
// the varphi normalization. Fixed-left windows run the seeded forward
// recursion; free-left/fixed-right windows run the reflected recursion.
PolyPair char_poly(const CMVRestriction& r, bool normalized = true);

}  // namespace cmvskew
