#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "breitrabi/spin_algebra.hpp"

using namespace breitrabi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spin-1/2 operators") {
  const auto ops = spin_operators(kSpinHalf);
  CHECK(ops.Jz(0, 0) == 0.5);
  CHECK(ops.Jz(1, 1) == -0.5);
  CHECK(ops.Jz(0, 1) == 0.0);
  // <1/2|J+|-1/2> = sqrt(1*1) = 1
  CHECK(ops.Jplus(0, 1) == 1.0);
  CHECK(ops.Jplus(1, 0) == 0.0);
}

TEST_CASE("spin-3/2 ladder entries match the sqrt formula") {
  const auto j = HalfInteger::from_twice(3);
  const auto ops = spin_operators(j);
  // <3/2|J+|1/2> = sqrt(3), the sodium-type sqrt(3)/2 coupling source
  CHECK_THAT(ops.Jplus(0, 1), Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-15));
  CHECK_THAT(ops.Jplus(1, 2), Catch::Matchers::WithinAbs(2.0, 1e-15));
  CHECK_THAT(ops.Jplus(2, 3), Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-15));
  CHECK_THROWS_AS(spin_operators(HalfInteger::from_twice(-1)),
                  std::invalid_argument);
}

TEST_CASE("ladder operators annihilate extremal states exactly") {
  for (int twice_j = 0; twice_j <= 9; ++twice_j) {
    const auto ops = spin_operators(HalfInteger::from_twice(twice_j));
    const std::size_t n = ops.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ops.Jplus(i, 0) == 0.0);       // J+|j,j> = 0
      CHECK(ops.Jminus(i, n - 1) == 0.0);  // J-|j,-j> = 0
    }
  }
}

TEST_CASE("commutator and Casimir identities up to j = 9/2") {
  for (int twice_j = 1; twice_j <= 9; ++twice_j) {
    const auto ops = spin_operators(HalfInteger::from_twice(twice_j));
    const std::size_t n = ops.dimension();
    const double jv = 0.5 * twice_j;

    // [Jx, Jy] = i Jz entrywise
    const CMat jx = to_complex(ops.Jx);
    const CMat comm = jx * ops.Jy - ops.Jy * jx;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Complex expect = Complex(0.0, 1.0) * ops.Jz(r, c);
        CHECK(std::abs(comm(r, c) - expect) <= 1e-14);
      }

    // J^2 = j(j+1) I
    const CMat j2 = jx * jx + ops.Jy * ops.Jy +
                    to_complex(ops.Jz) * to_complex(ops.Jz);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const double expect = r == c ? jv * (jv + 1.0) : 0.0;
        CHECK(std::abs(j2(r, c) - expect) <= 1e-13);
      }
  }
}

TEST_CASE("rotation at zero angles is the identity") {
  const auto u = rotation_matrix(HalfInteger::from_twice(3), 0.0, 0.0);
  CHECK(max_abs(u - CMat::identity(4)) <= 1e-14);
}

TEST_CASE("rotation by pi flips a spin-1/2 up to phase") {
  const auto u = rotation_matrix(kSpinHalf, kPi, 0.0);
  // first column is the image of |1/2>
  CHECK(std::abs(u(0, 0)) <= 1e-14);
  CHECK_THAT(std::abs(u(1, 0)), Catch::Matchers::WithinAbs(1.0, 1e-14));
}

TEST_CASE("rotations are unitary and conjugate Jz onto the axis") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u_theta(0.0, kPi);
  std::uniform_real_distribution<double> u_phi(0.0, 2.0 * kPi);
  for (int twice_j : {1, 2, 3, 5}) {
    const auto j = HalfInteger::from_twice(twice_j);
    const auto ops = spin_operators(j);
    const std::size_t n = ops.dimension();
    for (int rep = 0; rep < 8; ++rep) {
      const double theta = u_theta(rng), phi = u_phi(rng);
      const CMat u = rotation_matrix(j, theta, phi);
      CHECK(max_abs(adjoint(u) * u - CMat::identity(n)) <= 1e-13);

      // U Jz U† = n̂·J
      const CMat lhs = u * to_complex(ops.Jz) * adjoint(u);
      CMat rhs = to_complex(std::sin(theta) * std::cos(phi) * ops.Jx +
                            std::cos(theta) * ops.Jz);
      CMat jy = ops.Jy;
      jy *= Complex(std::sin(theta) * std::sin(phi), 0.0);
      rhs += jy;
      CHECK(max_abs(lhs - rhs) <= 1e-12);
    }
  }
}
