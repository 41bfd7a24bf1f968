#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "breitrabi/entanglement.hpp"
#include "breitrabi/spin_algebra.hpp"

using namespace breitrabi;

namespace {

const AtomParams& hydrogen() { return *find_preset("hydrogen"); }
const AtomParams& sodium() { return *find_preset("sodium"); }
HalfInteger h2(int t) { return HalfInteger::from_twice(t); }
constexpr double kPi = std::numbers::pi;

std::vector<Complex> random_state(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  for (auto& c : v) c = Complex(g(rng), g(rng));
  const double nrm = norm2(v);
  for (auto& c : v) c /= nrm;
  return v;
}

}  // namespace

TEST_CASE("reduced density of product and singlet states") {
  const auto basis = product_basis(kSpinHalf);

  std::vector<double> up_up = {1.0, 0.0, 0.0, 0.0};
  const auto rho = reduced_density(up_up, basis, Subsystem::electron);
  CHECK(std::abs(rho.matrix(0, 0) - 1.0) == 0.0);
  CHECK(std::abs(rho.matrix(1, 1)) == 0.0);
  CHECK(von_neumann_entropy(rho) == 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  std::vector<double> singlet = {0.0, -s, s, 0.0};
  const auto rho_s = reduced_density(singlet, basis, Subsystem::electron);
  CHECK_THAT(std::abs(rho_s.matrix(0, 0)), Catch::Matchers::WithinAbs(0.5, 1e-15));
  CHECK_THAT(std::abs(rho_s.matrix(1, 1)), Catch::Matchers::WithinAbs(0.5, 1e-15));
  CHECK(std::abs(rho_s.matrix(0, 1)) <= 1e-16);
  CHECK_THAT(von_neumann_entropy(rho_s), Catch::Matchers::WithinAbs(1.0, 1e-14));
}

TEST_CASE("unnormalized states are rejected") {
  const auto basis = product_basis(kSpinHalf);
  std::vector<double> bad = {1.0, 0.5, 0.0, 0.0};
  CHECK_THROWS_AS(reduced_density(bad, basis, Subsystem::electron),
                  std::invalid_argument);
}

TEST_CASE("sodium E_{+1}^- nuclear density has the two-term spectrum") {
  const FieldPoint p{0.05, 1.0};
  const auto basis = product_basis(sodium().nuclear_spin);
  const auto level = level_by_id(sodium(), p, {h2(2), Branch::minus});
  REQUIRE(level.alpha.has_value());
  const double a1 = *level.alpha;

  // oracle: direct partial trace of the two-term state
  // -sin(α1/2)|1/2,1/2> + cos(α1/2)|-1/2,3/2>
  const auto rho = reduced_density(level.amplitudes, basis, Subsystem::nuclear);
  const auto eig = jacobi_eigensolve(rho.matrix);
  std::vector<double> expect = {0.0, 0.0, std::sin(a1 / 2) * std::sin(a1 / 2),
                                std::cos(a1 / 2) * std::cos(a1 / 2)};
  std::sort(expect.begin(), expect.end());
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(std::abs(eig.values[k] - expect[k]) <= 1e-14);
}

TEST_CASE("entropy matches the mixing-angle closed form") {
  const auto basis = product_basis(kSpinHalf);
  for (double B : {-0.4, -0.05, 0.03, 0.2, 1.0}) {
    const auto level = level_by_id(hydrogen(), {B, 1.0}, {h2(0), Branch::minus});
    const double ca = std::cos(*level.alpha);
    const double p1 = 0.5 * (1.0 + ca), p2 = 0.5 * (1.0 - ca);
    const double expect = -p1 * std::log2(p1) - p2 * std::log2(p2);
    CHECK_THAT(state_entropy(level.amplitudes, basis),
               Catch::Matchers::WithinAbs(expect, 1e-13));
  }
}

TEST_CASE("electron and nuclear entropies agree for every pure state") {
  std::mt19937 rng(60);
  for (const auto& atom : {hydrogen(), sodium()}) {
    const auto basis = product_basis(atom.nuclear_spin);
    for (int rep = 0; rep < 40; ++rep) {
      const auto psi = random_state(basis.size(), rng);
      const double se =
          von_neumann_entropy(reduced_density(psi, basis, Subsystem::electron));
      const double sn =
          von_neumann_entropy(reduced_density(psi, basis, Subsystem::nuclear));
      CHECK(std::abs(se - sn) <= 1e-12);
      CHECK(se >= -1e-15);
      CHECK(se <= 1.0 + 1e-12);  // M <= 2 caps the entropy at one bit
    }
  }
}

TEST_CASE("schmidt: product state has a single term") {
  const auto basis = product_basis(kSpinHalf);
  std::vector<double> up_down = {0.0, 1.0, 0.0, 0.0};
  const auto dec = schmidt(up_down, basis);
  REQUIRE(dec.term_count() == 1);
  CHECK_THAT(dec.coefficients[0], Catch::Matchers::WithinAbs(1.0, 1e-14));
}

TEST_CASE("schmidt of hydrogen |E_0^-> pairs the right projections") {
  const auto basis = product_basis(kSpinHalf);
  const auto level = level_by_id(hydrogen(), {0.08, 1.0}, {h2(0), Branch::minus});
  const double a = *level.alpha;
  const auto dec = schmidt(level.amplitudes, basis);
  REQUIRE(dec.term_count() == 2);
  // descending: p1 = cos^2(α/2) on electron |−1/2> for α < π/2 (B > 0)
  CHECK_THAT(dec.coefficients[0],
             Catch::Matchers::WithinAbs(std::cos(a / 2) * std::cos(a / 2), 1e-13));
  CHECK_THAT(dec.coefficients[1],
             Catch::Matchers::WithinAbs(std::sin(a / 2) * std::sin(a / 2), 1e-13));
  CHECK_THAT(std::abs(dec.electron_vectors[0][1]), Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(std::abs(dec.nuclear_vectors[0][0]), Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(std::abs(dec.electron_vectors[1][0]), Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(std::abs(dec.nuclear_vectors[1][1]), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("schmidt of sodium |E_{+1}^-> pairs electron with nuclear partner") {
  const auto basis = product_basis(sodium().nuclear_spin);
  const auto level = level_by_id(sodium(), {0.03, 1.0}, {h2(2), Branch::minus});
  const auto dec = schmidt(level.amplitudes, basis);
  REQUIRE(dec.term_count() == 2);
  // each term pairs a sharp electron projection with a sharp nuclear one:
  // |1/2> with |m_I=1/2> and |-1/2> with |m_I=3/2>
  for (std::size_t t = 0; t < 2; ++t) {
    const bool electron_up = std::abs(dec.electron_vectors[t][0]) > 0.5;
    const std::size_t expect_nuclear = electron_up ? 1 : 0;  // index of 1/2 vs 3/2
    CHECK_THAT(std::abs(dec.nuclear_vectors[t][expect_nuclear]),
               Catch::Matchers::WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("schmidt reconstruction and orthonormality on random states") {
  std::mt19937 rng(2718);
  for (const auto& atom : {hydrogen(), sodium()}) {
    const auto basis = product_basis(atom.nuclear_spin);
    for (int rep = 0; rep < 30; ++rep) {
      const auto psi = random_state(basis.size(), rng);
      const auto dec = schmidt(psi, basis);
      REQUIRE(dec.term_count() <= 2);

      double sum = 0.0;
      for (double p : dec.coefficients) sum += p;
      CHECK(std::abs(sum - 1.0) <= 1e-14);

      for (std::size_t s = 0; s < dec.term_count(); ++s)
        for (std::size_t t = 0; t < dec.term_count(); ++t) {
          const double expect = s == t ? 1.0 : 0.0;
          CHECK(std::abs(std::abs(vdot(dec.electron_vectors[s],
                                       dec.electron_vectors[t])) - expect) <= 1e-13);
          CHECK(std::abs(std::abs(vdot(dec.nuclear_vectors[s],
                                       dec.nuclear_vectors[t])) - expect) <= 1e-13);
        }

      // reconstruction up to a global phase
      std::vector<Complex> recon(basis.size());
      for (std::size_t t = 0; t < dec.term_count(); ++t) {
        const double w = std::sqrt(dec.coefficients[t]);
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const auto& e = basis.entries[k];
          recon[k] += w *
                      dec.electron_vectors[t][projection_index(kElectronSpin, e.m_S)] *
                      dec.nuclear_vectors[t][projection_index(atom.nuclear_spin, e.m_I)];
        }
      }
      const Complex phase = vdot(recon, psi);
      double err = 0.0;
      for (std::size_t k = 0; k < basis.size(); ++k)
        err = std::max(err, std::abs(psi[k] - phase * recon[k]));
      CHECK(err <= 1e-13);

      // entropy from Schmidt coefficients equals the density-matrix route
      double s_schmidt = 0.0;
      for (double p : dec.coefficients)
        if (p > 0) s_schmidt -= p * std::log2(p);
      CHECK(std::abs(s_schmidt -
                     von_neumann_entropy(reduced_density(
                         psi, basis, Subsystem::electron))) <= 1e-12);
    }
  }
}

TEST_CASE("entropy is invariant under local unitaries") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  const auto basis = product_basis(sodium().nuclear_spin);
  for (int rep = 0; rep < 10; ++rep) {
    const auto psi = random_state(basis.size(), rng);
    const CMat u = kron(rotation_matrix(kElectronSpin, ang(rng), 2 * ang(rng)),
                        rotation_matrix(sodium().nuclear_spin, ang(rng), ang(rng)));
    // rotate in m_S-major order, then map back to basis order
    const std::size_t nI = basis.nuclear_dim();
    std::vector<Complex> kron_state(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& e = basis.entries[k];
      kron_state[projection_index(kElectronSpin, e.m_S) * nI +
                 projection_index(basis.nuclear_spin, e.m_I)] = psi[k];
    }
    const auto rotated = matvec(u, kron_state);
    std::vector<Complex> back(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& e = basis.entries[k];
      back[k] = rotated[projection_index(kElectronSpin, e.m_S) * nI +
                        projection_index(basis.nuclear_spin, e.m_I)];
    }
    const double s0 =
        von_neumann_entropy(reduced_density(psi, basis, Subsystem::electron));
    const double s1 =
        von_neumann_entropy(reduced_density(back, basis, Subsystem::electron));
    CHECK(std::abs(s0 - s1) <= 1e-12);
  }
}

TEST_CASE("entropy sweeps of hydrogen levels") {
  const int n = 401;
  const auto s_minus =
      entropy_sweep(hydrogen(), {h2(0), Branch::minus}, -0.5, 0.5, n, 1.0);
  const auto s_plus =
      entropy_sweep(hydrogen(), {h2(0), Branch::plus}, -0.5, 0.5, n, 1.0);
  // maximum 1 at B=0, monotone decreasing in |B|
  CHECK_THAT(s_minus[n / 2], Catch::Matchers::WithinAbs(1.0, 1e-14));
  CHECK_THAT(s_plus[n / 2], Catch::Matchers::WithinAbs(1.0, 1e-14));
  for (int i = n / 2 + 1; i < n; ++i) {
    CHECK(s_minus[i] < s_minus[i - 1] + 1e-15);
    CHECK(s_minus[n - 1 - i] < s_minus[n - i] + 1e-15);
  }

  // product levels carry exactly zero entropy
  for (double s : entropy_sweep(hydrogen(), {h2(2), Branch::single}, -0.5, 0.5,
                                101, 1.0))
    CHECK(s == 0.0);
}

TEST_CASE("sodium m=-1 branch is maximally entangled at 1/(a'-b')") {
  const double B_star = 1.0 / (sodium().a_prime - sodium().b_prime);
  const auto basis = product_basis(sodium().nuclear_spin);
  for (Branch br : {Branch::minus, Branch::plus}) {
    const auto level = level_by_id(sodium(), {B_star, 1.0}, {h2(-2), br});
    CHECK_THAT(state_entropy(level.amplitudes, basis),
               Catch::Matchers::WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("vanishing hyperfine term leaves exact product eigenstates") {
  const auto basis = product_basis(sodium().nuclear_spin);
  for (double B : {-0.7, -0.1, 0.05, 0.3}) {
    for (const auto& level : labeled_levels(sodium(), {B, 0.0}))
      CHECK(state_entropy(level.amplitudes, basis) == 0.0);
  }
}
