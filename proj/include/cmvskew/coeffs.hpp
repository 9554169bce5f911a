// Verblunsky coefficient sources and the skew-shift on the k-torus.
//
// The coefficient families implemented here:
//   skew_shift:  alpha_n = lambda * e((T^n x)_k)  for the k-dimensional
//                skew-shift (T x)_1 = x_1 + omega, (T x)_l = x_l + x_{l-1}.
//   rotated:     alpha_n = e(eta * n) * base_n
//   aleksandrov: alpha_n = e(phase)  * base_n
//   constant / explicit lists.
//
// power_phase(k, omega, lambda) builds the family alpha_n = lambda * e(omega n^k)
// as a skew_shift source: n^k = sum_l S2(k,l) l! C(n,l), so the family is the
// orbit of frequency k!*omega started at x_j = omega (k-j)! S2(k, k-j).
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cmvskew/num.hpp"

namespace cmvskew {

struct SkewShiftParams {
  int k = 1;          // torus dimension, 1 <= k <= 8
  double omega = 0.0; // frequency, reduced to [0,1)
  Complex lambda;     // coupling, 0 < |lambda| < 1

  SkewShiftParams(int k_, double omega_, Complex lambda_);
};

struct TorusPoint {
  std::vector<double> coords; // each reduced to [0,1)

  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> c);
  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[static_cast<size_t>(i)]; }
};

// One skew-shift step: (Tx)_1 = x_1 + omega, (Tx)_l = x_l + x_{l-1}.
TorusPoint skew_step(const SkewShiftParams& p, const TorusPoint& x);

// T^n x by the binomial closed form (T^n x)_l = C(n,l) omega + sum_j C(n,l-j) x_j,
// evaluated mod 1 term by term with exact 128-bit binomials. Works for n < 0 via
// C(n,r) = (-1)^r C(-n+r-1, r). Falls back to step-by-step accumulation if a
// binomial overflows 128 bits (never raises).
TorusPoint skew_orbit(const SkewShiftParams& p, const TorusPoint& x, Index n);

class VerblunskySource {
 public:
  struct Domain {
    bool bounded = false;
    Index lo = 0, hi = -1;
    bool contains(Index n) const { return !bounded || (n >= lo && n <= hi); }
  };

  static VerblunskySource constant(Complex alpha);
  static VerblunskySource explicit_list(std::vector<Complex> alphas, Index first_index);
  static VerblunskySource skew_shift(SkewShiftParams p, TorusPoint x);
  static VerblunskySource rotated(VerblunskySource base, double eta);
  static VerblunskySource aleksandrov(VerblunskySource base, double phase);
  // alpha_n = lambda * e(omega * n^k), realized as a skew_shift source.
  static VerblunskySource power_phase(int k, double omega, Complex lambda);

  Complex alpha_at(Index n) const;
  double rho_at(Index n) const;
  Domain domain() const;

  // Plain-text key-value descriptor (one "key value" pair per line).
  std::string to_config() const;
  static VerblunskySource from_config(const std::string& text);

 private:
  struct Constant {
    Complex alpha;
  };
  struct Explicit {
    std::vector<Complex> alphas;
    Index first = 0;
  };
  struct SkewShift {
    SkewShiftParams params;
    TorusPoint x0;
  };
  struct Wrapped {
    std::shared_ptr<const VerblunskySource> base;
    double eta = 0.0;   // rotated part: e(eta*n)
    double phase = 0.0; // aleksandrov part: e(phase)
  };
  using Kind = std::variant<Constant, Explicit, SkewShift, Wrapped>;

  explicit VerblunskySource(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

}  // namespace cmvskew
