#pragma once

#include <stdexcept>
#include <vector>

#include "breitrabi/matrix.hpp"

namespace breitrabi {

/// Raised when the Jacobi sweep cap is hit before convergence. Should never
/// happen for the dimensions this library handles; the message carries the
/// residual off-diagonal norm for diagnosis.
class EigensolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Mat vectors;                 // column k is the eigenvector of values[k]
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMat vectors;                // unitary; column k pairs with values[k]
};

/// Cyclic Jacobi rotations for a real symmetric matrix. Converges when the
/// off-diagonal Frobenius norm drops below 1e-14 relative to max(1, ||A||_F);
/// hard cap 100 sweeps.
SymmetricEigen jacobi_eigensolve(Mat a);

/// Complex-Hermitian variant: each pivot is phase-rotated to a real Jacobi
/// rotation. Same convergence policy.
HermitianEigen jacobi_eigensolve(CMat a);

}  // namespace breitrabi
