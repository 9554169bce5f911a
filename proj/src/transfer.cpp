#include "cmvskew/transfer.hpp"

namespace cmvskew {

Eigen::Matrix2cd one_step(const Complex& alpha, const Complex& z) {
  const double a = std::abs(alpha);
  if (a >= 1.0) throw std::invalid_argument("one_step: |alpha| must be < 1");
  const double inv_rho = 1.0 / rho_of(alpha);
  Eigen::Matrix2cd m;
  m << z, -std::conj(alpha), -alpha * z, Complex(1.0, 0.0);
  return inv_rho * m;
}

namespace {

void renormalize(Eigen::Matrix2cd& m, double& log_scale) {
  double s = m.cwiseAbs().maxCoeff();
  if (s > 2.0 || (s < 0.5 && s > 0.0)) {
    m /= s;
    log_scale += std::log(s);
  }
}

}  // namespace

TransferProduct compose(const TransferProduct& later, const TransferProduct& earlier) {
  TransferProduct out;
  out.mat = later.mat * earlier.mat;
  out.log_scale = later.log_scale + earlier.log_scale;
  out.steps = later.steps + earlier.steps;
  renormalize(out.mat, out.log_scale);
  return out;
}

TransferProduct forward_product(const VerblunskySource& src, Index a, Index b, const Complex& z) {
  if (a > b) throw std::invalid_argument("forward_product: need a <= b");
  TransferProduct t;
  for (Index j = a; j <= b; ++j) {
    t.mat = one_step(src.alpha_at(j), z) * t.mat;
    renormalize(t.mat, t.log_scale);
  }
  t.steps = b - a + 1;
  return t;
}

TransferProduct backward_product(const VerblunskySource& src, Index a_neg, const Complex& z) {
  if (a_neg > 0) throw std::invalid_argument("backward_product: need a_neg <= 0");
  if (z == Complex(0, 0)) throw std::invalid_argument("backward_product: z must be nonzero");
  Eigen::Matrix2cd left, right;
  left << Complex(-1.0, 0.0) / z, Complex(0, 0), Complex(0, 0), Complex(1.0, 0.0);
  right << -z, Complex(0, 0), Complex(0, 0), Complex(1.0, 0.0);
  TransferProduct t;
  t.mat = right;
  for (Index j = a_neg; j <= -1; ++j) {
    t.mat = one_step(-std::conj(src.alpha_at(j)), z) * t.mat;
    renormalize(t.mat, t.log_scale);
  }
  t.mat = left * t.mat;
  renormalize(t.mat, t.log_scale);
  t.steps = -a_neg;
  return t;
}

namespace {

PhiPairValue run_vector(const std::vector<Complex>& alphas, const Complex& seed_star,
                        const Complex& z) {
  Eigen::Vector2cd v(Complex(1, 0), seed_star);
  double ls = 0.0;
  for (const Complex& a : alphas) {
    v = one_step(a, z) * v;
    double s = v.cwiseAbs().maxCoeff();
    if (s > 2.0 || (s < 0.5 && s > 0.0)) {
      v /= s;
      ls += std::log(s);
    }
  }
  return PhiPairValue{v(0), v(1), ls};
}

}  // namespace

PhiPairValue varphi_fixed_left(const VerblunskySource& src, Index a, Index b, const Complex& beta,
                               const Complex& z) {
  std::vector<Complex> alphas;
  alphas.reserve(static_cast<size_t>(std::max<Index>(0, b - a + 1)));
  for (Index j = a; j <= b; ++j) alphas.push_back(src.alpha_at(j));
  return run_vector(alphas, std::conj(beta), z);
}

PhiPairValue varphi_fixed_both(const VerblunskySource& src, Index a, Index b, const Complex& beta,
                               const Complex& gamma, const Complex& z) {
  PhiPairValue inner = varphi_fixed_left(src, a, b - 1, beta, z);
  PhiPairValue out;
  out.phi = (z * inner.phi - std::conj(gamma) * inner.phi_star) / src.rho_at(b);
  // The reversed value of the para step: Phi* = Phi*_(inner) - gamma z Phi_(inner).
  out.phi_star = (inner.phi_star - gamma * z * inner.phi) / src.rho_at(b);
  out.log_scale = inner.log_scale;
  return out;
}

PhiPairValue varphi_fixed_right(const VerblunskySource& src, Index a, Index b, const Complex& gamma,
                                const Complex& z) {
  std::vector<Complex> alphas;
  alphas.reserve(static_cast<size_t>(std::max<Index>(0, b - a + 1)));
  for (Index j = 0; j <= b - a; ++j) alphas.push_back(-std::conj(src.alpha_at(b - 1 - j)));
  return run_vector(alphas, std::conj(gamma), z);
}

double lyapunov_estimate(const SourceFamily& family, int k, const Complex& z, Index n,
                         int grid_per_dim) {
  if (n < 1) throw std::invalid_argument("lyapunov_estimate: n must be >= 1");
  if (grid_per_dim < 1) throw std::invalid_argument("lyapunov_estimate: empty grid");
  std::vector<double> coords(static_cast<size_t>(k), 0.0);
  long total = 1;
  for (int i = 0; i < k; ++i) total *= grid_per_dim;
  Kahan acc;
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int i = 0; i < k; ++i) {
      coords[static_cast<size_t>(i)] =
          static_cast<double>(rem % grid_per_dim) / static_cast<double>(grid_per_dim);
      rem /= grid_per_dim;
    }
    VerblunskySource src = family(TorusPoint(coords));
    TransferProduct t = forward_product(src, 0, n - 1, z);
    acc.add(t.log_frobenius() / static_cast<double>(n));
  }
  return acc.sum / static_cast<double>(total);
}

std::vector<double> lyapunov_pointwise(const VerblunskySource& src, const Complex& z, Index n) {
  if (n < 1) throw std::invalid_argument("lyapunov_pointwise: n must be >= 1");
  std::vector<double> out(static_cast<size_t>(n));
  TransferProduct t;
  for (Index m = 1; m <= n; ++m) {
    t.mat = one_step(src.alpha_at(m - 1), z) * t.mat;
    double s = t.mat.cwiseAbs().maxCoeff();
    if (s > 2.0 || (s < 0.5 && s > 0.0)) {
      t.mat /= s;
      t.log_scale += std::log(s);
    }
    out[static_cast<size_t>(m - 1)] = t.log_frobenius() / static_cast<double>(m);
  }
  return out;
}

}  // namespace cmvskew
