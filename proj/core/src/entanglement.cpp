#include "breitrabi/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "breitrabi/eigensolver.hpp"
#include "breitrabi/spin_algebra.hpp"

namespace breitrabi {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kNegligibleWeight = 1e-14;

void check_normalized(double norm) {
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw std::invalid_argument("state is not normalized (|norm - 1| = " +
                                std::to_string(std::abs(norm - 1.0)) + ")");
}

std::size_t subsystem_index(const ProductBasis& basis,
                            const ProductBasis::Entry& e, Subsystem s) {
  return s == Subsystem::electron
             ? projection_index(kElectronSpin, e.m_S)
             : projection_index(basis.nuclear_spin, e.m_I);
}

}  // namespace

ReducedDensity reduced_density(const std::vector<Complex>& state,
                               const ProductBasis& basis, Subsystem subsystem) {
  if (state.size() != basis.size())
    throw std::invalid_argument("state length does not match basis");
  check_normalized(norm2(state));

  const std::size_t dim = subsystem == Subsystem::electron
                              ? basis.electron_dim()
                              : basis.nuclear_dim();
  ReducedDensity rho{subsystem, CMat(dim, dim)};
  // rho[a][b] = Σ_c ψ(a,c) conj(ψ(b,c)) with c the traced-out projection
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& ei = basis.entries[i];
      const auto& ej = basis.entries[j];
      const bool same_other = subsystem == Subsystem::electron
                                  ? ei.m_I == ej.m_I
                                  : ei.m_S == ej.m_S;
      if (!same_other) continue;
      rho.matrix(subsystem_index(basis, ei, subsystem),
                 subsystem_index(basis, ej, subsystem)) +=
          state[i] * std::conj(state[j]);
    }
  }
  return rho;
}

ReducedDensity reduced_density(const std::vector<double>& state,
                               const ProductBasis& basis, Subsystem subsystem) {
  return reduced_density(to_complex(state), basis, subsystem);
}

double von_neumann_entropy(const ReducedDensity& rho) {
  const HermitianEigen eig = jacobi_eigensolve(rho.matrix);
  double s = 0.0;
  for (double lambda : eig.values) {
    const double p = std::clamp(lambda, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

SchmidtDecomposition schmidt(const std::vector<Complex>& state,
                             const ProductBasis& basis) {
  const ReducedDensity rho_e =
      reduced_density(state, basis, Subsystem::electron);
  HermitianEigen eig = jacobi_eigensolve(rho_e.matrix);

  // descending probabilities
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t k = 0; k < eig.values.size(); ++k)
    order.emplace_back(eig.values[k], k);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  const std::size_t ne = basis.electron_dim();
  const std::size_t nn = basis.nuclear_dim();

  // degenerate maximally-mixed case with no coherence: fall back to the
  // m_S basis so the singlet point produces stable output
  const bool degenerate =
      order.size() == 2 && std::abs(order[0].first - order[1].first) <= 1e-12 &&
      std::abs(rho_e.matrix(0, 1)) <= 1e-13;

  SchmidtDecomposition out;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const double p = std::clamp(order[rank].first, 0.0, 1.0);
    if (p <= kNegligibleWeight) continue;

    std::vector<Complex> e_vec(ne);
    if (degenerate) {
      e_vec[rank] = 1.0;
    } else {
      for (std::size_t i = 0; i < ne; ++i)
        e_vec[i] = eig.vectors(i, order[rank].second);
    }
    // gauge: largest-|.| electron component real positive
    std::size_t imax = 0;
    for (std::size_t i = 1; i < ne; ++i)
      if (std::abs(e_vec[i]) > std::abs(e_vec[imax])) imax = i;
    const Complex phase = std::abs(e_vec[imax]) > 0
                              ? std::conj(e_vec[imax]) / std::abs(e_vec[imax])
                              : Complex(1.0, 0.0);
    for (auto& c : e_vec) c *= phase;

    // nuclear partner: |f_i> = (<e_i| ⊗ 1)|ψ> / sqrt(p_i)
    std::vector<Complex> f_vec(nn);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& entry = basis.entries[k];
      const std::size_t ie = projection_index(kElectronSpin, entry.m_S);
      const std::size_t in = projection_index(basis.nuclear_spin, entry.m_I);
      f_vec[in] += std::conj(e_vec[ie]) * state[k];
    }
    const double inv = 1.0 / std::sqrt(p);
    for (auto& c : f_vec) c *= inv;

    out.coefficients.push_back(p);
    out.electron_vectors.push_back(std::move(e_vec));
    out.nuclear_vectors.push_back(std::move(f_vec));
  }
  return out;
}

SchmidtDecomposition schmidt(const std::vector<double>& state,
                             const ProductBasis& basis) {
  return schmidt(to_complex(state), basis);
}

double state_entropy(const std::vector<double>& state,
                     const ProductBasis& basis) {
  return von_neumann_entropy(
      reduced_density(state, basis, Subsystem::electron));
}

std::vector<double> entropy_sweep(const AtomParams& atom, const LevelId& id,
                                  double B_lo, double B_hi, int n_points,
                                  double f) {
  if (n_points < 2)
    throw std::invalid_argument("entropy_sweep needs n_points >= 2");
  const auto basis = product_basis(atom.nuclear_spin);
  std::vector<double> out(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double B = std::lerp(B_lo, B_hi, static_cast<double>(i) /
                                                static_cast<double>(n_points - 1));
    const EigenLevel level = level_by_id(atom, {B, f}, id);
    out[i] = state_entropy(level.amplitudes, basis);
  }
  return out;
}

}  // namespace breitrabi
