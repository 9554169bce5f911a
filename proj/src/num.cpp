#include "cmvskew/num.hpp"

namespace cmvskew {

double frac_int_mult(double u, unsigned __int128 m) {
  if (m == 0) return 0.0;
  u = frac(u);
  // Find the most significant bit.
  int msb = 0;
  for (int b = 127; b >= 0; --b) {
    if ((m >> b) & 1) {
      msb = b;
      break;
    }
  }
  double acc = 0.0;
  for (int b = msb; b >= 0; --b) {
    acc *= 2.0;
    if (acc >= 1.0) acc -= 1.0;
    if ((m >> b) & 1) {
      acc += u;
      if (acc >= 1.0) acc -= 1.0;
    }
  }
  return acc;
}

double frac_int_mult_signed(double u, __int128 m) {
  if (m >= 0) return frac_int_mult(u, static_cast<unsigned __int128>(m));
  double r = frac_int_mult(u, static_cast<unsigned __int128>(-m));
  return (r == 0.0) ? 0.0 : 1.0 - r;
}

bool binom_u128(unsigned long long n, int r, unsigned __int128& out) {
  if (r < 0) return false;
  if (static_cast<unsigned long long>(r) > n) {
    out = 0;
    return true;
  }
  if (static_cast<unsigned long long>(r) > n - r) r = static_cast<int>(n - r);
  unsigned __int128 c = 1;
  for (int i = 1; i <= r; ++i) {
    unsigned __int128 f = n - static_cast<unsigned long long>(r) + i;
    // Overflow check for c *= f before exact division by i.
    if (f != 0 && c > (~static_cast<unsigned __int128>(0)) / f) return false;
    c = c * f / static_cast<unsigned>(i);
  }
  out = c;
  return true;
}

}  // namespace cmvskew
