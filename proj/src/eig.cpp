#include "cmvskew/eig.hpp"

#include <stdexcept>

#include "lapack_compat.hpp"

namespace cmvskew {

std::vector<Complex> eigenvalues_inplace(Eigen::MatrixXcd& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("eigenvalues: matrix must be square");
  std::vector<Complex> w(static_cast<size_t>(n));
  if (n == 0) return w;
  lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, w.data(),
                                  nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("zgeev failed, info=" + std::to_string(info));
  return w;
}

Eigensystem eigensystem(Eigen::MatrixXcd a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("eigensystem: matrix must be square");
  Eigensystem out;
  out.values.resize(static_cast<size_t>(n));
  out.vectors.resize(n, n);
  if (n == 0) return out;
  lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, out.values.data(),
                                  nullptr, 1, out.vectors.data(), n);
  if (info != 0) throw std::runtime_error("zgeev failed, info=" + std::to_string(info));
  return out;
}

}  // namespace cmvskew
