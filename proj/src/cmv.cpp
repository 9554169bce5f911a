#include "cmvskew/cmv.hpp"

namespace cmvskew {

Eigen::Matrix2cd theta_block(const Complex& alpha) {
  if (std::abs(alpha) > 1.0 + kUnimodularTol)
    throw std::invalid_argument("theta_block: |alpha| must be <= 1");
  double rho = rho_of(alpha);
  Eigen::Matrix2cd t;
  t << std::conj(alpha), rho, rho, -alpha;
  return t;
}

BoundaryCondition BoundaryCondition::fixed(Complex beta) {
  if (std::abs(std::abs(beta) - 1.0) > kUnimodularTol)
    throw std::invalid_argument("BoundaryCondition::fixed: value must be unimodular");
  BoundaryCondition bc;
  bc.fixed_ = true;
  bc.value_ = beta;
  return bc;
}

CMVRestriction CMVRestriction::build(VerblunskySource src, Index a, Index b,
                                     BoundaryCondition left, BoundaryCondition right) {
  if (a > b) throw std::invalid_argument("CMVRestriction: need a <= b");
  CMVRestriction r;
  r.a_ = a;
  r.b_ = b;
  r.src_ = std::move(src);
  r.left_ = left;
  r.right_ = right;
  r.alphas_.resize(static_cast<size_t>(b - a + 2));
  for (Index n = a - 1; n <= b; ++n) {
    Complex v;
    if (n == a - 1 && left.is_fixed())
      v = -std::conj(left.value());
    else if (n == b && right.is_fixed())
      v = right.value();
    else
      v = r.src_.alpha_at(n);
    r.alphas_[static_cast<size_t>(n - (a - 1))] = v;
  }
  return r;
}

CMVRestriction CMVRestriction::with_slot_values(VerblunskySource src, Index a, Index b,
                                                std::optional<Complex> left_slot,
                                                std::optional<Complex> right_slot) {
  BoundaryCondition left =
      left_slot ? BoundaryCondition::fixed(-std::conj(*left_slot)) : BoundaryCondition::free();
  BoundaryCondition right =
      right_slot ? BoundaryCondition::fixed(*right_slot) : BoundaryCondition::free();
  return build(std::move(src), a, b, left, right);
}

Complex CMVRestriction::alpha_tilde(Index n) const {
  if (n < a_ - 1 || n > b_) throw std::out_of_range("alpha_tilde: index outside [a-1, b]");
  return alphas_[static_cast<size_t>(n - (a_ - 1))];
}

namespace {

// Scatter the Theta block at coefficient index m (acting on coordinates
// {m, m+1}) into the window factor; straddling blocks contribute their
// diagonal corner only.
void place_block(Eigen::MatrixXcd& f, const CMVRestriction& r, Index m) {
  const Index a = r.a(), b = r.b();
  const Complex al = r.alpha_tilde(m);
  const double rho = r.rho_tilde(m);
  const bool lo_in = (m >= a && m <= b);
  const bool hi_in = (m + 1 >= a && m + 1 <= b);
  const Index i = m - a, j = m + 1 - a;
  if (lo_in && hi_in) {
    f(i, i) = std::conj(al);
    f(i, j) = rho;
    f(j, i) = rho;
    f(j, j) = -al;
  } else if (lo_in) {
    f(i, i) = std::conj(al);
  } else if (hi_in) {
    f(j, j) = -al;
  }
}

}  // namespace

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> dense_factors(const CMVRestriction& r) {
  const Index n = r.length();
  if (n > kDenseWindowCap) throw std::length_error("dense_factors: window exceeds cap");
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (Index m = r.a() - 1; m <= r.b(); ++m) {
    if ((m % 2 + 2) % 2 == 0)
      place_block(L, r, m);
    else
      place_block(M, r, m);
  }
  return {std::move(L), std::move(M)};
}

Eigen::MatrixXcd dense_matrix(const CMVRestriction& r) {
  const Index n = r.length();
  if (n > kDenseWindowCap) throw std::length_error("dense_matrix: window exceeds cap");
  auto [L, M] = dense_factors(r);
  // L and M have bandwidth 1, so accumulate the product row-wise instead of
  // a full dense multiply.
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index m = std::max<Index>(0, i - 1); m <= std::min<Index>(n - 1, i + 1); ++m) {
      if (L(i, m) == Complex(0, 0)) continue;
      for (Index j = std::max<Index>(0, m - 1); j <= std::min<Index>(n - 1, m + 1); ++j) {
        if (M(m, j) == Complex(0, 0)) continue;
        E(i, j) += L(i, m) * M(m, j);
      }
    }
  }
  return E;
}

Eigen::MatrixXcd Pencil::dense() const {
  const Index n = b - a + 1;
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    A(i, i) = diag[static_cast<size_t>(i)];
    if (i + 1 < n) {
      A(i, i + 1) = offdiag[static_cast<size_t>(i)];
      A(i + 1, i) = offdiag[static_cast<size_t>(i)];
    }
  }
  return A;
}

Pencil pencil_at(const CMVRestriction& r, const Complex& z) {
  Pencil p;
  p.z = z;
  p.a = r.a();
  p.b = r.b();
  p.diag.reserve(static_cast<size_t>(r.length()));
  p.offdiag.reserve(static_cast<size_t>(r.length() - 1));
  for (Index j = r.a(); j <= r.b(); ++j) {
    const bool even = ((j % 2 + 2) % 2 == 0);
    if (even)
      p.diag.push_back(z * r.alpha_tilde(j) + r.alpha_tilde(j - 1));
    else
      p.diag.push_back(-z * std::conj(r.alpha_tilde(j - 1)) - std::conj(r.alpha_tilde(j)));
    if (j < r.b()) {
      const double rho = r.rho_tilde(j);
      p.offdiag.push_back(even ? z * rho : Complex(-rho, 0.0));
    }
  }
  return p;
}

namespace {

// Accumulated phase of u_n; u_n = e(phi_n).
std::vector<double> gauge_phases(double x, double y, Index a, Index b, double phi_a) {
  std::vector<double> phi(static_cast<size_t>(b - a + 1));
  phi[0] = frac(phi_a);
  for (Index n = a + 1; n <= b; ++n) {
    double step = frac(static_cast<double>(n - 1) * x + y);
    bool even = ((n % 2 + 2) % 2 == 0);
    phi[static_cast<size_t>(n - a)] = frac(phi[static_cast<size_t>(n - 1 - a)] + (even ? -step : step));
  }
  return phi;
}

}  // namespace

std::vector<Complex> gauge_sequence(double x, double y, Index a, Index b, Complex u_a) {
  if (std::abs(std::abs(u_a) - 1.0) > kUnimodularTol)
    throw std::invalid_argument("gauge_sequence: |u_a| must be 1");
  double phi_a = std::atan2(u_a.imag(), u_a.real()) / kTwoPi;
  std::vector<double> phi = gauge_phases(x, y, a, b, phi_a);
  std::vector<Complex> u(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) u[i] = unit_phase(phi[i]);
  return u;
}

CMVRestriction rotate_restriction(const CMVRestriction& r, double x, double y) {
  const Index a = r.a(), b = r.b();
  VerblunskySource rotated =
      VerblunskySource::aleksandrov(VerblunskySource::rotated(r.source(), x), y);
  auto rotate_slot = [&](Index n, const Complex& slot) {
    return unit_phase(frac(frac_int_mult_signed(x, n) + y)) * slot;
  };
  std::optional<Complex> ls, rs;
  if (r.left().is_fixed()) ls = rotate_slot(a - 1, r.left_slot());
  if (r.right().is_fixed()) rs = rotate_slot(b, r.right_slot());
  return CMVRestriction::with_slot_values(std::move(rotated), a, b, ls, rs);
}

double verify_gauge(const CMVRestriction& r, double x, double y, const Complex& z) {
  if (!r.fixed_both()) throw std::invalid_argument("verify_gauge: fixed boundaries required");
  const Index a = r.a(), b = r.b();
  const Complex zt = unit_phase(frac(-x)) * z;

  CMVRestriction rt = rotate_restriction(r, x, y);
  Pencil A = pencil_at(r, z);
  Pencil At = pencil_at(rt, zt);

  // u over [a-1, b]: one extra element on the left so V has v_a = u_{a-1}.
  std::vector<double> phi = gauge_phases(x, y, a - 1, b, 0.0);
  auto u = [&](Index n) { return unit_phase(phi[static_cast<size_t>(n - (a - 1))]); };
  auto v = [&](Index n) {
    bool even = ((n % 2 + 2) % 2 == 0);
    return even ? u(n - 1) : u(n - 1) * unit_phase(frac(-x));
  };

  double res = 0.0;
  auto upd = [&](const Complex& lhs, const Complex& rhs) {
    res = std::max(res, std::abs(lhs - rhs));
  };
  for (Index j = a; j <= b; ++j) {
    const size_t i = static_cast<size_t>(j - a);
    upd(At.diag[i] * u(j), v(j) * A.diag[i]);
    if (j < b) {
      upd(At.offdiag[i] * u(j + 1), v(j) * A.offdiag[i]);  // entry (j, j+1)
      upd(At.offdiag[i] * u(j), v(j + 1) * A.offdiag[i]);  // entry (j+1, j)
    }
  }
  return res;
}

}  // namespace cmvskew
