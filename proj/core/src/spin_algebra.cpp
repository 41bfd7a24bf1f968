#include "breitrabi/spin_algebra.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "breitrabi/eigensolver.hpp"

namespace breitrabi {

std::size_t projection_index(HalfInteger j, HalfInteger m) {
  if (!is_valid_projection(j, m))
    throw std::invalid_argument("m=" + to_string(m) +
                                " is not a projection of j=" + to_string(j));
  return static_cast<std::size_t>((j.twice() - m.twice()) / 2);
}

SpinOperatorSet spin_operators(HalfInteger j) {
  if (j.twice() < 0)
    throw std::invalid_argument("spin magnitude must be >= 0, got " +
                                to_string(j));
  const std::size_t n = static_cast<std::size_t>(j.twice()) + 1;
  const double jv = j.value();

  SpinOperatorSet ops;
  ops.j = j;
  ops.Jz = Mat(n, n);
  ops.Jplus = Mat(n, n);

  const auto ms = projections(j);
  for (std::size_t k = 0; k < n; ++k) ops.Jz(k, k) = ms[k].value();
  // basis is ordered by decreasing m, so J+ raises index k to k-1
  for (std::size_t k = 1; k < n; ++k) {
    const double m = ms[k].value();
    ops.Jplus(k - 1, k) = std::sqrt((jv - m) * (jv + m + 1.0));
  }
  ops.Jminus = ops.Jplus.transpose();
  ops.Jx = 0.5 * (ops.Jplus + ops.Jminus);
  ops.Jy = CMat(n, n);
  const Complex half_over_i(0.0, -0.5);  // 1/(2i)
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      ops.Jy(r, c) = half_over_i * (ops.Jplus(r, c) - ops.Jminus(r, c));
  return ops;
}

CMat rotation_matrix(HalfInteger j, double theta, double phi) {
  const auto ops = spin_operators(j);
  const std::size_t n = ops.dimension();

  // exp(-i θ Jy) through the spectral decomposition of Jy
  const HermitianEigen jy = jacobi_eigensolve(ops.Jy);
  CMat exp_y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Complex s{};
      for (std::size_t d = 0; d < n; ++d)
        s += jy.vectors(i, d) * std::polar(1.0, -theta * jy.values[d]) *
             std::conj(jy.vectors(k, d));
      exp_y(i, k) = s;
    }

  // exp(-i φ Jz) is diagonal in this basis
  CMat out(n, n);
  const auto ms = projections(j);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex zi = std::polar(1.0, -phi * ms[i].value());
    for (std::size_t k = 0; k < n; ++k) out(i, k) = zi * exp_y(i, k);
  }
  return out;
}

}  // namespace breitrabi
