// Thin wrapper over LAPACK's general complex eigensolver (zgeev).
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cmvskew/num.hpp"

namespace cmvskew {

// Eigenvalues of a general complex matrix. Destroys the input.
std::vector<Complex> eigenvalues_inplace(Eigen::MatrixXcd& a);

inline std::vector<Complex> eigenvalues(Eigen::MatrixXcd a) { return eigenvalues_inplace(a); }

struct Eigensystem {
  std::vector<Complex> values;
  Eigen::MatrixXcd vectors;  // right eigenvectors, one per column
};

Eigensystem eigensystem(Eigen::MatrixXcd a);

}  // namespace cmvskew
