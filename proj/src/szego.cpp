#include "cmvskew/szego.hpp"

#include "cmvskew/eig.hpp"

namespace cmvskew {

Complex poly_eval(const PolyCoeffs& c, const Complex& z) {
  Complex v(0.0, 0.0);
  for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

PolyCoeffs reverse_conjugate(const PolyCoeffs& c) {
  PolyCoeffs r(c.rbegin(), c.rend());
  for (Complex& v : r) v = std::conj(v);
  return r;
}

std::vector<Complex> poly_roots(const PolyCoeffs& c) {
  int deg = static_cast<int>(c.size()) - 1;
  while (deg > 0 && std::abs(c[static_cast<size_t>(deg)]) == 0.0) --deg;
  if (deg < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  const Complex lead = c[static_cast<size_t>(deg)];
  for (int i = 0; i < deg; ++i) {
    comp(i, deg - 1) = -c[static_cast<size_t>(i)] / lead;
    if (i + 1 < deg) comp(i + 1, i) = Complex(1.0, 0.0);
  }
  std::vector<Complex> roots = eigenvalues_inplace(comp);
  // Newton polish; the companion eigensolve leaves a couple of digits on the
  // table for high-degree coefficient sets.
  for (Complex& r : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex pv(0, 0), dv(0, 0);
      for (size_t i = c.size(); i-- > 0;) {
        dv = dv * r + pv;
        pv = pv * r + c[i];
      }
      if (std::abs(dv) == 0.0) break;
      Complex step = pv / dv;
      r -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(r))) break;
    }
  }
  return roots;
}

namespace {

// One coupled Szego step in coefficient space.
void szego_step(PolyCoeffs& p, PolyCoeffs& ps, const Complex& alpha) {
  const size_t n = p.size();  // current degree + 1
  PolyCoeffs zp(n + 1, Complex(0, 0));
  for (size_t i = 0; i < n; ++i) zp[i + 1] = p[i];
  PolyCoeffs np(n + 1), nps(n + 1, Complex(0, 0));
  const Complex ca = std::conj(alpha);
  for (size_t i = 0; i <= n; ++i) {
    const Complex star = (i < ps.size()) ? ps[i] : Complex(0, 0);
    np[i] = zp[i] - ca * star;
    nps[i] = star - alpha * zp[i];
  }
  p = std::move(np);
  ps = std::move(nps);
}

double source_log_rho_sum(const VerblunskySource& src, Index lo, Index hi) {
  double s = 0.0;
  for (Index j = lo; j <= hi; ++j) s += std::log(src.rho_at(j));
  return s;
}

PolyPair run_recursion(const std::vector<Complex>& alphas, const Complex& seed_star) {
  PolyCoeffs p{Complex(1, 0)}, ps{seed_star};
  for (const Complex& a : alphas) szego_step(p, ps, a);
  PolyPair out;
  out.degree = static_cast<int>(alphas.size());
  out.phi = std::move(p);
  out.phi_star = std::move(ps);
  return out;
}

// Both-free fallback: interpolate det(zI - E) at deg+1 points on a circle.
PolyPair char_poly_interpolated(const CMVRestriction& r) {
  const Index n = r.length();
  if (n > 128) throw std::length_error("char_poly: free/free window cap is 128");
  Eigen::MatrixXcd E = dense_matrix(r);
  const int m = static_cast<int>(n) + 1;
  const double R = 2.0;
  std::vector<Complex> vals(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    Complex zj = R * unit_phase(static_cast<double>(j) / m);
    Eigen::MatrixXcd A = zj * Eigen::MatrixXcd::Identity(n, n) - E;
    vals[static_cast<size_t>(j)] = Eigen::PartialPivLU<Eigen::MatrixXcd>(A).determinant();
  }
  PolyPair out;
  out.degree = static_cast<int>(n);
  out.phi.assign(static_cast<size_t>(m), Complex(0, 0));
  for (int k = 0; k < m; ++k) {
    Complex s(0, 0);
    for (int j = 0; j < m; ++j)
      s += vals[static_cast<size_t>(j)] * unit_phase(-static_cast<double>(j) * k / m);
    out.phi[static_cast<size_t>(k)] = s / (static_cast<double>(m) * std::pow(R, k));
  }
  out.phi_star = reverse_conjugate(out.phi);
  return out;
}

}  // namespace

PolyPair szego_recurse(const VerblunskySource& src, int n) {
  if (n < 0) throw std::invalid_argument("szego_recurse: n must be >= 0");
  std::vector<Complex> alphas(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) alphas[static_cast<size_t>(j)] = src.alpha_at(j);
  PolyPair out = run_recursion(alphas, Complex(1, 0));
  out.log_scale = source_log_rho_sum(src, 0, n - 1);
  return out;
}

PolyCoeffs paraorthogonal(const VerblunskySource& src, int n, const Complex& beta) {
  if (n < 1) throw std::invalid_argument("paraorthogonal: n must be >= 1");
  if (std::abs(std::abs(beta) - 1.0) > kUnimodularTol)
    throw std::invalid_argument("paraorthogonal: |beta| must be 1");
  PolyPair base = szego_recurse(src, n - 1);
  PolyCoeffs out(static_cast<size_t>(n) + 1, Complex(0, 0));
  const Complex cb = std::conj(beta);
  for (size_t i = 0; i < base.phi.size(); ++i) out[i + 1] = base.phi[i];
  for (size_t i = 0; i < base.phi_star.size(); ++i) out[i] -= cb * base.phi_star[i];
  return out;
}

PolyPair aleksandrov_poly(const VerblunskySource& src, int n, const Complex& beta) {
  if (std::abs(std::abs(beta) - 1.0) > kUnimodularTol)
    throw std::invalid_argument("aleksandrov_poly: |beta| must be 1");
  double phase = frac(std::atan2(beta.imag(), beta.real()) / kTwoPi);
  return szego_recurse(VerblunskySource::aleksandrov(src, phase), n);
}

PolyPair char_poly(const CMVRestriction& r, bool normalized) {
  const Index a = r.a(), b = r.b();
  if (r.length() > kCharPolyCap) throw std::length_error("char_poly: window exceeds cap");
  PolyPair out;
  if (r.left().is_fixed()) {
    // Seeded forward recursion over alpha~_a .. alpha~_b with seed
    // (1, conj(beta)); the slot at b (if fixed) is the para step.
    std::vector<Complex> alphas;
    alphas.reserve(static_cast<size_t>(r.length()));
    for (Index j = a; j <= b; ++j) alphas.push_back(r.alpha_tilde(j));
    out = run_recursion(alphas, std::conj(r.left().value()));
    if (normalized) out.log_scale = source_log_rho_sum(r.source(), a, b);
  } else if (r.right().is_fixed()) {
    // Reflected window: Phi^{[a,b]}_{free,gamma} equals the fixed-left
    // polynomial of the family alpha'_j = -conj(alpha_{b-1-j}) with left
    // subscript gamma.
    std::vector<Complex> alphas;
    alphas.reserve(static_cast<size_t>(r.length()));
    for (Index j = 0; j <= b - a; ++j) alphas.push_back(-std::conj(r.alpha_tilde(b - 1 - j)));
    out = run_recursion(alphas, std::conj(r.right().value()));
    if (normalized) out.log_scale = source_log_rho_sum(r.source(), a - 1, b - 1);
  } else {
    out = char_poly_interpolated(r);
    if (normalized) out.log_scale = source_log_rho_sum(r.source(), a - 1, b);
  }
  return out;
}

}  // namespace cmvskew
