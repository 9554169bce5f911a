// Small numeric utilities shared across the library: exact mod-1 arithmetic,
// unit phases, compensated summation, and integer binomials.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace cmvskew {

using Complex = std::complex<double>;
using Index = long long;

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Reduce to [0,1). Negative inputs wrap upward; a result that rounds to 1.0
// is mapped back to 0.0 so the half-open contract holds bitwise.
inline double frac(double x) {
  double f = x - std::floor(x);
  return (f >= 1.0) ? 0.0 : f;
}

// e(t) = exp(2*pi*i*t)
inline Complex unit_phase(double t) {
  return Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
}

// Distance on the circle R/Z.
inline double circle_dist(double a, double b) {
  double d = frac(a - b);
  return std::min(d, 1.0 - d);
}

// ||x|| = dist(x, Z)
inline double dist_to_int(double x) {
  double f = frac(x);
  return std::min(f, 1.0 - f);
}

inline double rho_of(const Complex& alpha) {
  double a2 = std::norm(alpha);
  if (a2 > 1.0) a2 = 1.0;
  return std::sqrt(1.0 - a2);
}

// frac(m*u) for u in [0,1) and a (possibly huge) integer m, via binary
// double-and-add. frac(2*acc) is exact in binary floating point, so the only
// rounding happens in the O(popcount) additions.
double frac_int_mult(double u, unsigned __int128 m);
double frac_int_mult_signed(double u, __int128 m);

// Binomial coefficient C(n, r) for n >= 0, r <= 16 or so. Returns false on
// 128-bit overflow.
bool binom_u128(unsigned long long n, int r, unsigned __int128& out);

// Kahan compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct KahanComplex {
  Kahan re, im;
  void add(const Complex& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex value() const { return Complex(re.sum, im.sum); }
};

}  // namespace cmvskew
