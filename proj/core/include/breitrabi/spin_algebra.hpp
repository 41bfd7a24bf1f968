#pragma once

#include "breitrabi/half_integer.hpp"
#include "breitrabi/matrix.hpp"

namespace breitrabi {

/// Angular-momentum operator matrices for one spin of magnitude j, in the
/// basis |j,m> ordered by decreasing m (m = j, j-1, ..., -j). Entries are in
/// units of hbar. Jz, J+/-, Jx are real; only Jy needs complex entries.
struct SpinOperatorSet {
  HalfInteger j;
  Mat Jz;
  Mat Jplus;
  Mat Jminus;
  Mat Jx;
  CMat Jy;

  std::size_t dimension() const { return Jz.rows(); }
};

/// Builds <j m'|J±|j m> = sqrt((j∓m)(j±m+1)) δ_{m',m±1} and derived matrices.
/// Throws std::invalid_argument for negative j.
SpinOperatorSet spin_operators(HalfInteger j);

/// Index of projection m in the decreasing-m basis ordering.
std::size_t projection_index(HalfInteger j, HalfInteger m);

/// SU(2) rotation exp(-i φ Jz) · exp(-i θ Jy), computed by diagonalizing Jy.
/// Carries a z-quantized spin onto the axis (sinθ cosφ, sinθ sinφ, cosθ).
CMat rotation_matrix(HalfInteger j, double theta, double phi);

}  // namespace breitrabi
