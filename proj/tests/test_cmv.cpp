#include <random>

#include "cmvskew/cmv.hpp"
#include "cmvskew/eig.hpp"
#include "doctest.h"

using namespace cmvskew;

namespace {

std::mt19937 rng(2024);

Complex random_disk(double rmax = 0.95) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double r = rmax * std::sqrt(uni(rng));
  double t = uni(rng);
  return r * unit_phase(t);
}

Complex random_circle() {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  return unit_phase(uni(rng));
}

VerblunskySource random_explicit(Index lo, Index hi) {
  std::vector<Complex> a(static_cast<size_t>(hi - lo + 1));
  for (Complex& v : a) v = random_disk();
  return VerblunskySource::explicit_list(std::move(a), lo);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Independent assembly: build the factors of the modified whole-line operator
// on a padded window and crop, instead of going through dense_factors.
Eigen::MatrixXcd padded_oracle(const CMVRestriction& r, Index pad) {
  const Index lo = r.a() - pad, hi = r.b() + pad;
  const Index n = hi - lo + 1;
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n, n), M = Eigen::MatrixXcd::Zero(n, n);
  auto alpha = [&](Index m) -> Complex {
    if (m >= r.a() - 1 && m <= r.b()) return r.alpha_tilde(m);
    return r.source().alpha_at(m);
  };
  for (Index m = lo - 1; m <= hi; ++m) {
    Eigen::Matrix2cd th = theta_block(alpha(m));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Index row = m + i, col = m + j;
        if (row < lo || row > hi || col < lo || col > hi) continue;
        (((m % 2) + 2) % 2 == 0 ? L : M)(row - lo, col - lo) = th(i, j);
      }
  }
  Eigen::MatrixXcd E = L * M;
  return E.block(r.a() - lo, r.a() - lo, r.length(), r.length());
}

}  // namespace

TEST_CASE("theta_block basics") {
  Eigen::Matrix2cd t0 = theta_block(Complex(0, 0));
  CHECK(t0(0, 0) == Complex(0, 0));
  CHECK(t0(0, 1) == Complex(1, 0));
  CHECK(t0(1, 0) == Complex(1, 0));
  CHECK(t0(1, 1) == Complex(0, 0));

  Eigen::Matrix2cd t1 = theta_block(Complex(1, 0));
  CHECK(t1(0, 0) == Complex(1, 0));
  CHECK(t1(1, 1) == Complex(-1, 0));
  CHECK(std::abs(t1(0, 1)) == 0.0);

  for (int i = 0; i < 25; ++i) {
    Eigen::Matrix2cd t = theta_block(random_disk());
    CHECK(max_abs(t * t.adjoint() - Eigen::Matrix2cd::Identity()) < 1e-14);
  }
  CHECK_THROWS_AS(theta_block(Complex(1.5, 0)), std::invalid_argument);
}

TEST_CASE("half-line CMV block: window [0,n-1], left fixed(1), right free") {
  // Oracle: the half-line factors L+ = diag(Theta_0, Theta_2, ...),
  // M+ = diag(1, Theta_1, Theta_3, ...), truncated.
  const Index n = 9;
  VerblunskySource src = random_explicit(-2, n + 2);
  CMVRestriction r = CMVRestriction::build(src, 0, n - 1, BoundaryCondition::fixed(Complex(1, 0)),
                                           BoundaryCondition::free());

  Eigen::MatrixXcd Lp = Eigen::MatrixXcd::Zero(n, n), Mp = Eigen::MatrixXcd::Zero(n, n);
  Mp(0, 0) = Complex(1, 0);
  for (Index m = 0; m <= n; m += 2) {
    Eigen::Matrix2cd th = theta_block(src.alpha_at(m));
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        if (m + i < n && m + j < n) Lp(m + i, m + j) = th(i, j);
  }
  for (Index m = 1; m <= n; m += 2) {
    Eigen::Matrix2cd th = theta_block(src.alpha_at(m));
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        if (m + i < n && m + j < n) Mp(m + i, m + j) = th(i, j);
  }
  CHECK(max_abs(dense_matrix(r) - Lp * Mp) < 1e-14);
}

TEST_CASE("constant alpha=0 with both boundaries fixed(1) is permutation-like and unitary") {
  VerblunskySource src = VerblunskySource::constant(Complex(0, 0));
  CMVRestriction r = CMVRestriction::build(src, 0, 5, BoundaryCondition::fixed(Complex(1, 0)),
                                           BoundaryCondition::fixed(Complex(1, 0)));
  Eigen::MatrixXcd e = dense_matrix(r);
  CHECK(max_abs(e * e.adjoint() - Eigen::MatrixXcd::Identity(6, 6)) < 1e-14);
  for (Index i = 0; i < 6; ++i) {
    int nonzero = 0;
    for (Index j = 0; j < 6; ++j)
      if (std::abs(e(i, j)) > 1e-14) ++nonzero;
    CHECK(nonzero == 1);  // one unimodular entry per row
  }
}

TEST_CASE("fixed/fixed restrictions are unitary; matches padded-window oracle") {
  for (int rep = 0; rep < 10; ++rep) {
    Index a = static_cast<Index>(rng() % 7) - 3;
    Index b = a + 1 + static_cast<Index>(rng() % 12);
    VerblunskySource src = random_explicit(a - 6, b + 6);
    CMVRestriction r = CMVRestriction::build(src, a, b, BoundaryCondition::fixed(random_circle()),
                                             BoundaryCondition::fixed(random_circle()));
    Eigen::MatrixXcd e = dense_matrix(r);
    const Index n = r.length();
    CHECK(max_abs(e * e.adjoint() - Eigen::MatrixXcd::Identity(n, n)) < 1e-12);
    CHECK(max_abs(e - padded_oracle(r, 4)) < 1e-13);
  }
}

TEST_CASE("free boundaries: restriction equals the cropped whole-line operator") {
  for (int rep = 0; rep < 6; ++rep) {
    Index a = -2, b = 9;
    VerblunskySource src = random_explicit(a - 8, b + 8);
    CMVRestriction r =
        CMVRestriction::build(src, a, b, BoundaryCondition::free(), BoundaryCondition::free());
    CHECK(max_abs(dense_matrix(r) - padded_oracle(r, 5)) < 1e-13);
  }
}

TEST_CASE("dense matrix: bandwidth <= 2, 1x1 window, unimodular spectrum") {
  VerblunskySource src = random_explicit(-10, 40);
  CMVRestriction r = CMVRestriction::build(src, -3, 20, BoundaryCondition::fixed(random_circle()),
                                           BoundaryCondition::fixed(random_circle()));
  Eigen::MatrixXcd e = dense_matrix(r);
  for (Index i = 0; i < r.length(); ++i)
    for (Index j = 0; j < r.length(); ++j)
      if (std::abs(i - j) > 2) CHECK(std::abs(e(i, j)) == 0.0);

  CMVRestriction one =
      CMVRestriction::build(src, 4, 4, BoundaryCondition::free(), BoundaryCondition::free());
  CHECK(dense_matrix(one).rows() == 1);

  CMVRestriction six = CMVRestriction::build(src, 0, 5, BoundaryCondition::fixed(random_circle()),
                                             BoundaryCondition::fixed(random_circle()));
  for (const Complex& v : eigenvalues(dense_matrix(six)))
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
}

TEST_CASE("pencil entries: alpha=0 pattern and symmetry") {
  VerblunskySource zero = VerblunskySource::constant(Complex(0, 0));
  CMVRestriction r =
      CMVRestriction::build(zero, 0, 7, BoundaryCondition::free(), BoundaryCondition::free());
  Complex z(0.3, 0.4);
  Pencil p = pencil_at(r, z);
  for (const Complex& d : p.diag) CHECK(std::abs(d) == 0.0);
  for (size_t j = 0; j < p.offdiag.size(); ++j) {
    if (j % 2 == 0)
      CHECK(std::abs(p.offdiag[j] - z) < 1e-15);
    else
      CHECK(std::abs(p.offdiag[j] + Complex(1, 0)) < 1e-15);
  }
  Eigen::MatrixXcd a = p.dense();
  CHECK(max_abs(a - a.transpose()) == 0.0);
}

TEST_CASE("pencil vanishes on eigenvectors of the restriction") {
  VerblunskySource src = random_explicit(-4, 20);
  CMVRestriction r = CMVRestriction::build(src, -2, 13, BoundaryCondition::fixed(random_circle()),
                                           BoundaryCondition::fixed(random_circle()));
  Eigensystem es = eigensystem(dense_matrix(r));
  for (Index j = 0; j < r.length(); ++j) {
    Eigen::VectorXcd psi = es.vectors.col(j);
    Eigen::MatrixXcd a = pencil_at(r, es.values[static_cast<size_t>(j)]).dense();
    CHECK((a * psi).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("two-route determinant: det(z - E) = det(L) det(zL* - M) on fixed/fixed windows") {
  for (int rep = 0; rep < 8; ++rep) {
    Index a = static_cast<Index>(rng() % 5) - 2;
    Index b = a + 1 + static_cast<Index>(rng() % 10);
    VerblunskySource src = random_explicit(a - 3, b + 3);
    CMVRestriction r = CMVRestriction::build(src, a, b, BoundaryCondition::fixed(random_circle()),
                                             BoundaryCondition::fixed(random_circle()));
    Complex z = 1.3 * random_circle();
    auto [L, M] = dense_factors(r);
    const Index n = r.length();
    Complex lhs = Eigen::PartialPivLU<Eigen::MatrixXcd>(z * Eigen::MatrixXcd::Identity(n, n) -
                                                        dense_matrix(r))
                      .determinant();
    Complex rhs = Eigen::PartialPivLU<Eigen::MatrixXcd>(L).determinant() *
                  Eigen::PartialPivLU<Eigen::MatrixXcd>(pencil_at(r, z).dense()).determinant();
    CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-9);
  }
}

TEST_CASE("gauge sequence basics") {
  std::vector<Complex> u = gauge_sequence(0.0, 0.0, -3, 8, Complex(1, 0));
  for (const Complex& v : u) CHECK(std::abs(v - Complex(1, 0)) < 1e-15);

  std::vector<Complex> w = gauge_sequence(0.137, 0.642, -5, 60, unit_phase(0.3));
  for (const Complex& v : w) CHECK(std::abs(std::abs(v) - 1.0) < 1e-14);
}

TEST_CASE("gauge intertwining: zero rotation is exact, random rotations at 1e-12") {
  VerblunskySource src = random_explicit(-40, 80);
  CMVRestriction r = CMVRestriction::build(src, -9, 54, BoundaryCondition::fixed(random_circle()),
                                           BoundaryCondition::fixed(random_circle()));
  CHECK(verify_gauge(r, 0.0, 0.0, unit_phase(0.21)) == 0.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    double x = uni(rng), y = uni(rng);
    CHECK(verify_gauge(r, x, y, unit_phase(uni(rng))) < 1e-12);
  }
}

TEST_CASE("spectrum covariance: rotated restriction spectrum is e(-x) times the original") {
  VerblunskySource src = random_explicit(-70, 140);
  CMVRestriction r = CMVRestriction::build(src, -20, 107, BoundaryCondition::fixed(random_circle()),
                                           BoundaryCondition::fixed(random_circle()));
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double x = uni(rng), y = uni(rng);
  std::vector<Complex> base = eigenvalues(dense_matrix(r));
  std::vector<Complex> rot = eigenvalues(dense_matrix(rotate_restriction(r, x, y)));
  const Complex ph = unit_phase(frac(-x));
  double hausdorff = 0.0;
  for (const Complex& v : base) {
    double best = 1e9;
    for (const Complex& w : rot) best = std::min(best, std::abs(ph * v - w));
    hausdorff = std::max(hausdorff, best);
  }
  for (const Complex& w : rot) {
    double best = 1e9;
    for (const Complex& v : base) best = std::min(best, std::abs(ph * v - w));
    hausdorff = std::max(hausdorff, best);
  }
  CHECK(hausdorff < 1e-10);
}

TEST_CASE("boundary validation") {
  CHECK_THROWS_AS(BoundaryCondition::fixed(Complex(0.5, 0)), std::invalid_argument);
  VerblunskySource src = random_explicit(-2, 4);
  CHECK_THROWS_AS(
      CMVRestriction::build(src, 3, 2, BoundaryCondition::free(), BoundaryCondition::free()),
      std::invalid_argument);
}
