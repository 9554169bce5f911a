#include "cmvskew/stats.hpp"

#include <algorithm>
#include <numeric>

#include "cmvskew/eig.hpp"

namespace cmvskew {

AngleSet angle_set_from(std::vector<double> raw) {
  for (double& t : raw) t = frac(t);
  std::sort(raw.begin(), raw.end());
  AngleSet out;
  out.angles.reserve(raw.size());
  for (double t : raw) {
    if (!out.angles.empty() && t - out.angles.back() <= 1e-12) continue;
    out.angles.push_back(t);
  }
  // wrap dedup
  if (out.angles.size() > 1 && (out.angles.front() + 1.0 - out.angles.back()) <= 1e-12)
    out.angles.pop_back();
  return out;
}

AngleSet spectrum_angles(const CMVRestriction& r) {
  if (!r.fixed_both())
    throw std::invalid_argument("spectrum_angles: fixed/fixed boundaries required");
  Eigen::MatrixXcd e = dense_matrix(r);
  std::vector<Complex> ev = eigenvalues_inplace(e);
  double resid = 0.0;
  std::vector<double> raw;
  raw.reserve(ev.size());
  for (const Complex& v : ev) {
    resid = std::max(resid, std::abs(std::abs(v) - 1.0));
    raw.push_back(frac(std::atan2(v.imag(), v.real()) / kTwoPi));
  }
  if (resid > 1e-8)
    throw std::runtime_error("spectrum_angles: unimodularity residual " + std::to_string(resid));
  AngleSet out = angle_set_from(std::move(raw));
  out.unimodularity_residual = resid;
  return out;
}

GapVector gap_vector(const AngleSet& a) {
  const Index n = a.size();
  if (n < 2) throw std::invalid_argument("gap_vector: need at least two angles");
  GapVector g;
  g.gaps.reserve(static_cast<size_t>(n));
  for (Index j = 0; j + 1 < n; ++j)
    g.gaps.push_back(a.angles[static_cast<size_t>(j + 1)] - a.angles[static_cast<size_t>(j)]);
  g.gaps.push_back(a.angles.front() + 1.0 - a.angles.back());
  g.normalized.reserve(static_cast<size_t>(n));
  for (double v : g.gaps) g.normalized.push_back(static_cast<double>(n) * v);
  return g;
}

AngleSet rotation_angles(double eta, Index N) {
  if (N < 1) throw std::invalid_argument("rotation_angles: N must be >= 1");
  std::vector<double> raw(static_cast<size_t>(N));
  for (Index n = 1; n <= N; ++n)
    raw[static_cast<size_t>(n - 1)] = frac_int_mult_signed(frac(eta), n);
  return angle_set_from(std::move(raw));
}

std::vector<Index> histogram(const std::vector<double>& values, double bin_width) {
  if (bin_width <= 0.0) throw std::invalid_argument("histogram: bin width must be positive");
  std::vector<Index> counts;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("histogram: negative value");
    size_t bin = static_cast<size_t>(v / bin_width);
    if (bin >= counts.size()) counts.resize(bin + 1, 0);
    ++counts[bin];
  }
  return counts;
}

double ks_distance_exp1(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    double cdf = 1.0 - std::exp(-values[i]);
    d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - cdf));
  }
  return d;
}

LaplaceSpec LaplaceSpec::hat(int resolution) {
  LaplaceSpec s;
  s.f = [](double t) { return std::max(0.0, 1.0 - std::abs(t)); };
  s.support_radius = 1.0;
  s.resolution = resolution;
  return s;
}

double laplace_functional(const AngleSet& points, const LaplaceSpec& spec) {
  const Index n = points.size();
  if (n == 0) return 1.0;
  const Index grid = spec.resolution * n;
  std::vector<double> s(static_cast<size_t>(grid), 0.0);
  const double c = spec.support_radius;
  // Each point contributes only on |x_n - theta| <= c/N.
  for (double x : points.angles) {
    const double lo = x - c / static_cast<double>(n);
    const Index ilo = static_cast<Index>(std::ceil(lo * static_cast<double>(grid)));
    const Index ihi = static_cast<Index>(
        std::floor((x + c / static_cast<double>(n)) * static_cast<double>(grid)));
    for (Index i = ilo; i <= ihi; ++i) {
      double theta = static_cast<double>(i) / static_cast<double>(grid);
      double u = frac(x - theta);
      if (u >= 0.5) u -= 1.0;  // into [-1/2, 1/2)
      size_t slot = static_cast<size_t>(((i % grid) + grid) % grid);
      s[slot] += spec.f(static_cast<double>(n) * u);
    }
  }
  Kahan acc;
  for (double v : s) acc.add(std::exp(-v));
  return acc.sum / static_cast<double>(grid);
}

double laplace_compare(const AngleSet& a, const AngleSet& b, const LaplaceSpec& spec) {
  if (a.size() != b.size()) throw std::invalid_argument("laplace_compare: size mismatch");
  return std::abs(laplace_functional(a, spec) - laplace_functional(b, spec));
}

RotationMatch match_to_rotation(const AngleSet& a, double omega) {
  const Index n = a.size();
  if (n < 2) throw std::invalid_argument("match_to_rotation: need N >= 2");
  // Rigid reference {-2 n omega}, sorted.
  std::vector<double> ref(static_cast<size_t>(n));
  for (Index m = 1; m <= n; ++m) {
    double t = frac_int_mult_signed(frac(omega), 2 * m);
    ref[static_cast<size_t>(m - 1)] = (t == 0.0) ? 0.0 : 1.0 - t;
  }
  std::sort(ref.begin(), ref.end());

  const double tol = 10.0 / static_cast<double>(n);
  RotationMatch best;
  best.tolerance_used = tol;
  for (Index s = 0; s < n; ++s) {
    // Pair theta_(j) with ref_((j+s) mod n); estimate vartheta by the
    // circular mean of the differences, then count pairs within tol.
    KahanComplex mean;
    for (Index j = 0; j < n; ++j) {
      double d = a.angles[static_cast<size_t>(j)] - ref[static_cast<size_t>((j + s) % n)];
      mean.add(unit_phase(d));
    }
    Complex m = mean.value();
    if (std::abs(m) == 0.0) continue;
    double vartheta = frac(std::atan2(m.imag(), m.real()) / kTwoPi);
    Index matched = 0;
    for (Index j = 0; j < n; ++j) {
      double target = frac(vartheta + ref[static_cast<size_t>((j + s) % n)]);
      if (circle_dist(a.angles[static_cast<size_t>(j)], target) <= tol) ++matched;
    }
    double fraction = static_cast<double>(matched) / static_cast<double>(n);
    if (fraction > best.matched_fraction) {
      best.matched_fraction = fraction;
      best.vartheta = vartheta;
    }
  }
  return best;
}

double wegner_average(const SkewShiftParams& p, const TorusPoint& base, Index n, double theta1,
                      double theta2, int grid_points, const Complex& beta0, const Complex& gamma0) {
  if (p.k < 2) throw std::invalid_argument("wegner_average: k >= 2 required");
  double arc = theta2 - theta1;
  if (arc < 0.0 || arc > 1.0) throw std::invalid_argument("wegner_average: bad arc");
  if (grid_points < 1) throw std::invalid_argument("wegner_average: empty grid");
  const int vary = p.k - 2;  // x_{k-1} in 1-based labels
  Kahan acc;
  for (int g = 0; g < grid_points; ++g) {
    std::vector<double> coords = base.coords;
    coords[static_cast<size_t>(vary)] =
        frac(coords[static_cast<size_t>(vary)] +
             static_cast<double>(g) / static_cast<double>(grid_points));
    VerblunskySource src = VerblunskySource::skew_shift(p, TorusPoint(coords));
    Complex am = src.alpha_at(-1), ap = src.alpha_at(n - 1);
    CMVRestriction r = CMVRestriction::with_slot_values(
        src, 0, n - 1, beta0 * am / std::abs(am), gamma0 * ap / std::abs(ap));
    AngleSet spec = spectrum_angles(r);
    Index count = 0;
    for (double t : spec.angles)
      if (arc >= 1.0 || frac(t - theta1) <= arc) ++count;
    acc.add(static_cast<double>(count) / static_cast<double>(n));
  }
  return acc.sum / static_cast<double>(grid_points);
}

Quasimode quasimode(const VerblunskySource& src, Index L, Index M) {
  if (L < 8) throw std::invalid_argument("quasimode: L must be >= 8");
  const Index n = 2 * L + 1;
  Complex am = src.alpha_at(-L - 1), ap = src.alpha_at(L);
  CMVRestriction r = CMVRestriction::with_slot_values(src, -L, L, am / std::abs(am),
                                                      ap / std::abs(ap));
  Eigensystem es = eigensystem(dense_matrix(r));

  // Pigeonhole: sum_j |psi_j(0)|^2 = 1 over an orthonormal eigenbasis, so the
  // best eigenvector carries at least 1/(2L+1) there. zgeev vectors of a
  // unitary matrix are orthonormal up to roundoff; normalize and take the max.
  Index best = -1;
  double best_mass = -1.0;
  for (Index j = 0; j < n; ++j) {
    double nrm = es.vectors.col(j).norm();
    double mass = std::norm(es.vectors(L, j)) / (nrm * nrm);
    if (mass > best_mass) {
      best_mass = mass;
      best = j;
    }
  }
  if (best_mass + 1e-12 < 1.0 / static_cast<double>(n))
    throw std::runtime_error("quasimode: pigeonhole bound violated");

  Eigen::VectorXcd psi = es.vectors.col(best) / es.vectors.col(best).norm();
  const Complex z = es.values[static_cast<size_t>(best)];

  DecayScanReport scan = decay_scan(src, z, L, M, 0.0);
  auto pick = [&](bool positive) {
    Index arg = 0;
    double bestg = std::numeric_limits<double>::infinity();
    for (const DecayScanRecord& rec : scan.records) {
      if ((rec.k > 0) != positive) continue;
      if (rec.max_abs_green < bestg) {
        bestg = rec.max_abs_green;
        arg = rec.k;
      }
    }
    return arg;
  };
  Quasimode out;
  out.k_minus = pick(false);
  out.k_plus = pick(true);
  out.z = z;
  out.center_mass = best_mass;
  out.lo = out.k_minus;
  out.hi = out.k_plus;

  Eigen::VectorXcd trunc = Eigen::VectorXcd::Zero(n);
  for (Index m = out.k_minus; m <= out.k_plus; ++m) trunc(m + L) = psi(m + L);
  trunc /= trunc.norm();
  Eigen::MatrixXcd e = dense_matrix(r);
  out.residual = (e * trunc - z * trunc).norm();
  out.psi.assign(trunc.data() + (out.lo + L), trunc.data() + (out.hi + L + 1));
  return out;
}

}  // namespace cmvskew
