#include "cmvskew/ergodic.hpp"

#include <cmath>

namespace cmvskew {

Complex weyl_linear(double omega, Index L) {
  if (L < 1) throw std::invalid_argument("weyl_linear: L must be >= 1");
  KahanComplex s;
  for (Index l = 1; l <= L; ++l) s.add(unit_phase(frac_int_mult_signed(frac(omega), l)));
  return s.value();
}

Complex weyl_quadratic(double t, double omega, Index L) {
  if (L < 1) throw std::invalid_argument("weyl_quadratic: L must be >= 1");
  t = frac(t);
  omega = frac(omega);
  KahanComplex s;
  // Quadratic phase advanced by second differences: ph_{l+1} - ph_l =
  // t + (2l+1) omega, all mod 1.
  double ph = frac(t + omega);      // phase at l = 1
  double d = frac(t + 3.0 * omega); // increment to l = 2
  const double dd = frac(2.0 * omega);
  for (Index l = 1; l <= L; ++l) {
    s.add(unit_phase(ph));
    ph = frac(ph + d);
    d = frac(d + dd);
  }
  return s.value();
}

BoxSpec::BoxSpec(double e, double d, double cx_, double cy_) : eps(e), delta(d), cx(cx_), cy(cy_) {
  if (!(eps > 0.0 && eps < 0.5) || !(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("BoxSpec: half-widths must lie in (0, 1/2)");
}

namespace {

// Vaaler's J-hat: pi t (1-|t|) cot(pi t) + |t| on (-1,1), value 1 at 0.
double vaaler_jhat(double t) {
  double a = std::abs(t);
  if (a == 0.0) return 1.0;
  return M_PI * t * (1.0 - a) / std::tan(M_PI * t) + a;
}

// 1-D Selberg majorant coefficients for the interval [-w, w] at degree N:
//   s(0) = 2w + 1/(N+1)
//   s(j) = Jhat(j/(N+1)) sin(2 pi j w)/(pi j) + (1 - j/(N+1)) cos(2 pi j w)/(N+1).
std::vector<double> interval_majorant(double w, int N) {
  std::vector<double> s(static_cast<size_t>(N + 1));
  s[0] = 2.0 * w + 1.0 / (N + 1);
  for (int j = 1; j <= N; ++j) {
    double t = static_cast<double>(j) / (N + 1);
    s[static_cast<size_t>(j)] = vaaler_jhat(t) * std::sin(kTwoPi * j * w) / (M_PI * j) +
                                (1.0 - t) * std::cos(kTwoPi * j * w) / (N + 1);
  }
  return s;
}

double eval_profile(const std::vector<double>& s, double x) {
  Kahan acc;
  acc.add(s[0]);
  for (size_t j = 1; j < s.size(); ++j)
    acc.add(2.0 * s[j] * std::cos(kTwoPi * static_cast<double>(j) * x));
  return acc.sum;
}

}  // namespace

Complex SelbergMajorant::coeff(int j, int k) const {
  int aj = std::abs(j), ak = std::abs(k);
  if (aj > jmax || ak > kmax) return Complex(0, 0);
  return Complex(sx[static_cast<size_t>(aj)] * sy[static_cast<size_t>(ak)], 0.0);
}

double SelbergMajorant::eval(double x, double y) const {
  return eval_profile(sx, x) * eval_profile(sy, y);
}

double SelbergMajorant::max_abs_coeff() const {
  double mx = 0.0, my = 0.0;
  for (double v : sx) mx = std::max(mx, std::abs(v));
  for (double v : sy) my = std::max(my, std::abs(v));
  return mx * my;
}

SelbergMajorant selberg_majorant(const BoxSpec& b) {
  SelbergMajorant m;
  m.jmax = static_cast<int>(std::floor(2.0 / b.eps));
  m.kmax = static_cast<int>(std::floor(2.0 / b.delta));
  m.sx = interval_majorant(b.eps, m.jmax);
  m.sy = interval_majorant(b.delta, m.kmax);
  return m;
}

BoxVisits box_visits(const SkewShiftParams& p, const TorusPoint& xy, const BoxSpec& b, Index L,
                     Index stride) {
  if (p.k != 2) throw std::invalid_argument("box_visits: k = 2 skew-shift only");
  if (L < 1 || stride < 1) throw std::invalid_argument("box_visits: L, stride must be >= 1");
  std::vector<Index> per_residue(static_cast<size_t>(stride), 0);
  TorusPoint x = xy;
  Index total = 0;
  for (Index l = 0; l <= L; ++l) {
    if (b.contains(x[0], x[1])) {
      ++total;
      ++per_residue[static_cast<size_t>(l % stride)];
    }
    if (l < L) x = skew_step(p, x);
  }
  BoxVisits out;
  out.total = total;
  out.best_offset = 0;
  out.count = per_residue[0];
  for (Index r = 1; r < stride; ++r) {
    if (per_residue[static_cast<size_t>(r)] < out.count) {
      out.count = per_residue[static_cast<size_t>(r)];
      out.best_offset = r;
    }
  }
  return out;
}

double diophantine_constant(double omega, double tau, Index qmax) {
  if (qmax < 1) throw std::invalid_argument("diophantine_constant: qmax must be >= 1");
  omega = frac(omega);
  double best = std::pow(1.0, tau) * dist_to_int(omega);  // q = 1
  // Convergent denominators via the continued fraction of omega.
  long double rem = static_cast<long double>(omega);
  unsigned long long q_prev = 0, q_cur = 1;
  for (int iter = 0; iter < 128; ++iter) {
    if (rem < 1e-18L) break;  // rational within working precision
    long double inv = 1.0L / rem;
    unsigned long long a = static_cast<unsigned long long>(inv);
    rem = inv - static_cast<long double>(a);
    unsigned long long q_next = a * q_cur + q_prev;
    if (q_next > static_cast<unsigned long long>(qmax)) break;
    q_prev = q_cur;
    q_cur = q_next;
    long double qo = static_cast<long double>(q_cur) * static_cast<long double>(omega);
    double dist = static_cast<double>(std::abs(qo - std::llround(static_cast<double>(qo))));
    best = std::min(best, std::pow(static_cast<double>(q_cur), tau) * dist);
    if (dist == 0.0) break;
  }
  return best;
}

}  // namespace cmvskew
