#include "breitrabi/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace breitrabi {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTolerance = 1e-14;

double off_diagonal_norm(const Mat& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

double off_diagonal_norm(const CMat& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

// tan of the Jacobi angle that annihilates the pivot, given
// tau = (a_qq - a_pp) / (2 a_pq).
double jacobi_tangent(double tau) {
  const double t = 1.0 / (std::abs(tau) + std::hypot(1.0, tau));
  return tau < 0 ? -t : t;
}

template <typename M>
void check_square_symmetric_shape(const M& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("eigensolver requires a square matrix");
}

void sort_ascending(std::vector<double>& values, Mat& vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> v(n);
  Mat w(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = values[order[k]];
    for (std::size_t i = 0; i < n; ++i) w(i, k) = vectors(i, order[k]);
  }
  values = std::move(v);
  vectors = std::move(w);
}

void sort_ascending(std::vector<double>& values, CMat& vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> v(n);
  CMat w(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = values[order[k]];
    for (std::size_t i = 0; i < n; ++i) w(i, k) = vectors(i, order[k]);
  }
  values = std::move(v);
  vectors = std::move(w);
}

}  // namespace

SymmetricEigen jacobi_eigensolve(Mat a) {
  check_square_symmetric_shape(a);
  const std::size_t n = a.rows();
  Mat v = Mat::identity(n);
  if (n <= 1) {
    SymmetricEigen out;
    out.values.assign(n, n ? a(0, 0) : 0.0);
    out.vectors = std::move(v);
    return out;
  }

  const double tol = kOffTolerance * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol) {
      SymmetricEigen out;
      out.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
      out.vectors = std::move(v);
      sort_ascending(out.values, out.vectors);
      return out;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        // skip pivots already at rounding level of their diagonal pair
        if (std::abs(apq) <=
            1e-30 + 1e-18 * (std::abs(a(p, p)) + std::abs(a(q, q))))
          continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = jacobi_tangent(tau);
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const double aip = a(i, p), aiq = a(i, q);
            a(i, p) = c * aip - s * aiq;
            a(i, q) = s * aip + c * aiq;
            a(p, i) = a(i, p);
            a(q, i) = a(i, q);
          }
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }
  throw EigensolverError(
      "Jacobi eigensolver did not converge in 100 sweeps; residual "
      "off-diagonal norm " +
      std::to_string(off_diagonal_norm(a)));
}

HermitianEigen jacobi_eigensolve(CMat a) {
  check_square_symmetric_shape(a);
  const std::size_t n = a.rows();
  CMat v = CMat::identity(n);
  if (n <= 1) {
    HermitianEigen out;
    out.values.assign(n, n ? a(0, 0).real() : 0.0);
    out.vectors = std::move(v);
    return out;
  }

  const double tol = kOffTolerance * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol) {
      HermitianEigen out;
      out.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
      out.vectors = std::move(v);
      sort_ascending(out.values, out.vectors);
      return out;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-30 + 1e-18 * (std::abs(a(p, p).real()) +
                                  std::abs(a(q, q).real())))
          continue;
        // factor out the pivot phase, then rotate as in the real case
        const Complex u = a(p, q) / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = jacobi_tangent(tau);
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        a(p, p) = a(p, p).real() - t * r;
        a(q, q) = a(q, q).real() + t * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        // columns: col_p' = c*u*col_p - s*col_q ; col_q' = s*u*col_p + c*col_q
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const Complex aip = a(i, p), aiq = a(i, q);
            a(i, p) = c * (u * aip) - s * aiq;
            a(i, q) = s * (u * aip) + c * aiq;
            a(p, i) = std::conj(a(i, p));
            a(q, i) = std::conj(a(i, q));
          }
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * (u * vip) - s * viq;
          v(i, q) = s * (u * vip) + c * viq;
        }
      }
    }
  }
  throw EigensolverError(
      "Hermitian Jacobi eigensolver did not converge in 100 sweeps; residual "
      "off-diagonal norm " +
      std::to_string(off_diagonal_norm(a)));
}

}  // namespace breitrabi
