#pragma once

#include <vector>

#include "breitrabi/matrix.hpp"
#include "breitrabi/product_basis.hpp"
#include "breitrabi/spectra.hpp"

namespace breitrabi {

enum class Subsystem { electron, nuclear };

/// Reduced density matrix of one spin of the pair; Hermitian, unit trace,
/// dimension 2 (electron) or 2I+1 (nuclear).
struct ReducedDensity {
  Subsystem subsystem = Subsystem::electron;
  CMat matrix;
};

/// Exact partial trace of |ψ><ψ| over the complementary spin. The state is
/// an amplitude vector over the ProductBasis; rejects vectors whose norm
/// deviates from 1 by more than 1e-10.
ReducedDensity reduced_density(const std::vector<Complex>& state,
                               const ProductBasis& basis, Subsystem subsystem);
ReducedDensity reduced_density(const std::vector<double>& state,
                               const ProductBasis& basis, Subsystem subsystem);

/// Von Neumann entropy -Σ λ log2 λ in bits; eigenvalues are clipped into
/// [0, 1] before the logarithm.
double von_neumann_entropy(const ReducedDensity& rho);

/// Σ_i sqrt(p_i) |e_i> ⊗ |f_i| with p_i descending and both vector families
/// orthonormal. M <= 2 for these states since the electron dimension is 2.
struct SchmidtDecomposition {
  std::vector<double> coefficients;                    // p_i, descending
  std::vector<std::vector<Complex>> electron_vectors;  // |e_i>, dim 2
  std::vector<std::vector<Complex>> nuclear_vectors;   // |f_i>, dim 2I+1
  std::size_t term_count() const { return coefficients.size(); }
};

/// Schmidt decomposition through the electron reduced density. Gauge: each
/// electron vector's largest-magnitude component is made real positive; a
/// degenerate pair p1 = p2 = 1/2 with a diagonal electron density falls back
/// to the m_S basis ordered by decreasing m_S.
SchmidtDecomposition schmidt(const std::vector<Complex>& state,
                             const ProductBasis& basis);
SchmidtDecomposition schmidt(const std::vector<double>& state,
                             const ProductBasis& basis);

/// Entropy of a pure two-spin state (electron side; equal to the nuclear
/// side for pure states).
double state_entropy(const std::vector<double>& state,
                     const ProductBasis& basis);

/// Entropy of the identified level at each grid point of a B sweep.
std::vector<double> entropy_sweep(const AtomParams& atom, const LevelId& id,
                                  double B_lo, double B_hi, int n_points,
                                  double f);

}  // namespace breitrabi
