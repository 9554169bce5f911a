#include "cmvskew/coeffs.hpp"

#include <sstream>

namespace cmvskew {

SkewShiftParams::SkewShiftParams(int k_, double omega_, Complex lambda_)
    : k(k_), omega(frac(omega_)), lambda(lambda_) {
  if (k < 1 || k > 8) throw std::invalid_argument("SkewShiftParams: k must be in [1,8]");
  double a = std::abs(lambda);
  if (!(a > 0.0) || a >= 1.0)
    throw std::invalid_argument("SkewShiftParams: need 0 < |lambda| < 1");
}

TorusPoint::TorusPoint(std::vector<double> c) : coords(std::move(c)) {
  for (double& v : coords) v = frac(v);
}

TorusPoint skew_step(const SkewShiftParams& p, const TorusPoint& x) {
  if (x.dim() != p.k) throw std::invalid_argument("skew_step: dimension mismatch");
  std::vector<double> y(static_cast<size_t>(p.k));
  y[0] = frac(x[0] + p.omega);
  for (int l = 1; l < p.k; ++l) y[static_cast<size_t>(l)] = frac(x[l] + x[l - 1]);
  TorusPoint out;
  out.coords = std::move(y);
  return out;
}

namespace {

// frac(C(n, r) * u) for n of either sign; ok == false on 128-bit overflow.
double frac_binom_mult(Index n, int r, double u, bool& ok) {
  if (r == 0) return frac(u);
  if (n >= 0) {
    unsigned __int128 c;
    if (!binom_u128(static_cast<unsigned long long>(n), r, c)) {
      ok = false;
      return 0.0;
    }
    return frac_int_mult(u, c);
  }
  // C(n,r) = (-1)^r C(-n+r-1, r) for n < 0
  unsigned __int128 c;
  if (!binom_u128(static_cast<unsigned long long>(-n + r - 1), r, c)) {
    ok = false;
    return 0.0;
  }
  double v = frac_int_mult(u, c);
  if (r % 2 == 1) v = (v == 0.0) ? 0.0 : 1.0 - v;
  return v;
}

TorusPoint orbit_by_iteration(const SkewShiftParams& p, TorusPoint x, Index n) {
  if (n >= 0) {
    for (Index i = 0; i < n; ++i) x = skew_step(p, x);
    return x;
  }
  // Inverse step: (T^-1 x)_1 = x_1 - omega, then downwards (T^-1 x)_l = x_l - (T^-1 x)_{l-1}.
  for (Index i = 0; i < -n; ++i) {
    std::vector<double> y(static_cast<size_t>(p.k));
    y[0] = frac(x[0] - p.omega);
    for (int l = 1; l < p.k; ++l) y[static_cast<size_t>(l)] = frac(x[l] - y[static_cast<size_t>(l - 1)]);
    x.coords = std::move(y);
  }
  return x;
}

}  // namespace

TorusPoint skew_orbit(const SkewShiftParams& p, const TorusPoint& x, Index n) {
  if (x.dim() != p.k) throw std::invalid_argument("skew_orbit: dimension mismatch");
  std::vector<double> y(static_cast<size_t>(p.k));
  bool ok = true;
  for (int l = 1; l <= p.k; ++l) {
    double acc = frac_binom_mult(n, l, p.omega, ok);
    for (int j = 1; j <= l; ++j) {
      acc += frac_binom_mult(n, l - j, x[j - 1], ok);
      if (acc >= 1.0) acc -= 1.0;
    }
    if (!ok) break;
    y[static_cast<size_t>(l - 1)] = acc;
  }
  if (!ok) return orbit_by_iteration(p, x, n);  // binomial overflow: mod-1 accumulation
  TorusPoint out;
  out.coords = std::move(y);
  return out;
}

VerblunskySource VerblunskySource::constant(Complex alpha) {
  if (std::abs(alpha) >= 1.0) throw std::invalid_argument("constant source: |alpha| must be < 1");
  return VerblunskySource(Kind(Constant{alpha}));
}

VerblunskySource VerblunskySource::explicit_list(std::vector<Complex> alphas, Index first_index) {
  for (const Complex& a : alphas)
    if (std::abs(a) >= 1.0) throw std::invalid_argument("explicit source: |alpha_n| must be < 1");
  return VerblunskySource(Kind(Explicit{std::move(alphas), first_index}));
}

VerblunskySource VerblunskySource::skew_shift(SkewShiftParams p, TorusPoint x) {
  if (x.dim() != p.k) throw std::invalid_argument("skew_shift source: dimension mismatch");
  return VerblunskySource(Kind(SkewShift{std::move(p), std::move(x)}));
}

VerblunskySource VerblunskySource::rotated(VerblunskySource base, double eta) {
  Wrapped w;
  w.base = std::make_shared<VerblunskySource>(std::move(base));
  w.eta = frac(eta);
  return VerblunskySource(Kind(std::move(w)));
}

VerblunskySource VerblunskySource::aleksandrov(VerblunskySource base, double phase) {
  Wrapped w;
  w.base = std::make_shared<VerblunskySource>(std::move(base));
  w.phase = frac(phase);
  return VerblunskySource(Kind(std::move(w)));
}

VerblunskySource VerblunskySource::power_phase(int k, double omega, Complex lambda) {
  if (k < 1 || k > 8) throw std::invalid_argument("power_phase: k must be in [1,8]");
  omega = frac(omega);
  // Stirling numbers of the second kind up to k.
  std::vector<std::vector<unsigned long long>> s2(static_cast<size_t>(k + 1),
                                                  std::vector<unsigned long long>(static_cast<size_t>(k + 1), 0));
  s2[0][0] = 1;
  for (int n = 1; n <= k; ++n)
    for (int m = 1; m <= n; ++m)
      s2[static_cast<size_t>(n)][static_cast<size_t>(m)] =
          static_cast<unsigned long long>(m) * s2[static_cast<size_t>(n - 1)][static_cast<size_t>(m)] +
          s2[static_cast<size_t>(n - 1)][static_cast<size_t>(m - 1)];

  unsigned long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<unsigned long long>(i);

  // n^k = sum_l S2(k,l) l! C(n,l): frequency k! omega, start x_j = omega (k-j)! S2(k,k-j).
  std::vector<double> x0(static_cast<size_t>(k), 0.0);
  unsigned long long lf = 1;
  for (int l = 1; l <= k - 1; ++l) {
    lf *= static_cast<unsigned long long>(l);  // l!
    x0[static_cast<size_t>(k - l - 1)] =
        frac_int_mult(omega, static_cast<unsigned __int128>(lf) * s2[static_cast<size_t>(k)][static_cast<size_t>(l)]);
  }
  SkewShiftParams p(k, frac_int_mult(omega, static_cast<unsigned __int128>(fact)), lambda);
  return skew_shift(std::move(p), TorusPoint(std::move(x0)));
}

Complex VerblunskySource::alpha_at(Index n) const {
  if (const auto* c = std::get_if<Constant>(&kind_)) return c->alpha;
  if (const auto* e = std::get_if<Explicit>(&kind_)) {
    if (n < e->first || n >= e->first + static_cast<Index>(e->alphas.size()))
      throw std::out_of_range("alpha_at: index outside explicit source domain");
    return e->alphas[static_cast<size_t>(n - e->first)];
  }
  if (const auto* s = std::get_if<SkewShift>(&kind_)) {
    TorusPoint t = skew_orbit(s->params, s->x0, n);
    return s->params.lambda * unit_phase(t[s->params.k - 1]);
  }
  const auto& w = std::get<Wrapped>(kind_);
  double rot = frac(frac_int_mult_signed(w.eta, n) + w.phase);
  return unit_phase(rot) * w.base->alpha_at(n);
}

double VerblunskySource::rho_at(Index n) const { return rho_of(alpha_at(n)); }

VerblunskySource::Domain VerblunskySource::domain() const {
  if (const auto* e = std::get_if<Explicit>(&kind_)) {
    Domain d;
    d.bounded = true;
    d.lo = e->first;
    d.hi = e->first + static_cast<Index>(e->alphas.size()) - 1;
    return d;
  }
  if (const auto* w = std::get_if<Wrapped>(&kind_)) return w->base->domain();
  return Domain{};
}

namespace {

void emit(std::ostringstream& os, const char* key, double v) {
  os.precision(17);
  os << key << ' ' << v << '\n';
}

}  // namespace

std::string VerblunskySource::to_config() const {
  std::ostringstream os;
  os.precision(17);
  double eta = 0.0, phase = 0.0;
  const VerblunskySource* cur = this;
  while (const auto* w = std::get_if<Wrapped>(&cur->kind_)) {
    eta = frac(eta + w->eta);
    phase = frac(phase + w->phase);
    cur = w->base.get();
  }
  if (const auto* c = std::get_if<Constant>(&cur->kind_)) {
    os << "kind constant\n";
    emit(os, "lambda_re", c->alpha.real());
    emit(os, "lambda_im", c->alpha.imag());
  } else if (const auto* e = std::get_if<Explicit>(&cur->kind_)) {
    os << "kind explicit\n";
    os << "first " << e->first << '\n';
    os << "alphas";
    for (const Complex& a : e->alphas) os << ' ' << a.real() << ' ' << a.imag();
    os << '\n';
  } else {
    const auto& s = std::get<SkewShift>(cur->kind_);
    os << "kind skew_shift\n";
    os << "k " << s.params.k << '\n';
    emit(os, "omega", s.params.omega);
    emit(os, "lambda_re", s.params.lambda.real());
    emit(os, "lambda_im", s.params.lambda.imag());
    os << "x";
    for (double v : s.x0.coords) os << ' ' << v;
    os << '\n';
  }
  if (eta != 0.0) emit(os, "eta", eta);
  if (phase != 0.0) emit(os, "phase", phase);
  return os.str();
}

VerblunskySource VerblunskySource::from_config(const std::string& text) {
  std::istringstream is(text);
  std::string key, kind;
  int k = 1;
  double omega = 0.0, lre = 0.0, lim = 0.0, eta = 0.0, phase = 0.0;
  Index first = 0;
  std::vector<double> xs;
  std::vector<Complex> alphas;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    if (!(ls >> key)) continue;
    if (key == "kind") ls >> kind;
    else if (key == "k") ls >> k;
    else if (key == "omega") ls >> omega;
    else if (key == "lambda_re") ls >> lre;
    else if (key == "lambda_im") ls >> lim;
    else if (key == "eta") ls >> eta;
    else if (key == "phase") ls >> phase;
    else if (key == "first") ls >> first;
    else if (key == "x") {
      double v;
      while (ls >> v) xs.push_back(v);
    } else if (key == "alphas") {
      double re, im;
      while (ls >> re >> im) alphas.emplace_back(re, im);
    } else {
      throw std::invalid_argument("source config: unknown key '" + key + "'");
    }
  }
  VerblunskySource base = [&]() {
    if (kind == "constant") return constant(Complex(lre, lim));
    if (kind == "explicit") return explicit_list(std::move(alphas), first);
    if (kind == "skew_shift")
      return skew_shift(SkewShiftParams(k, omega, Complex(lre, lim)), TorusPoint(std::move(xs)));
    throw std::invalid_argument("source config: unknown kind '" + kind + "'");
  }();
  if (eta != 0.0) base = rotated(std::move(base), eta);
  if (phase != 0.0) base = aleksandrov(std::move(base), phase);
  return base;
}

}  // namespace cmvskew
