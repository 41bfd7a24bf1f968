#pragma once

#include <vector>

#include "breitrabi/atom.hpp"
#include "breitrabi/matrix.hpp"
#include "breitrabi/product_basis.hpp"

namespace breitrabi {

/// One Δm=0 block of the Hamiltonian in E/A units. `offset` is the block's
/// first index in the ProductBasis ordering.
struct HamiltonianBlock {
  HalfInteger m;
  std::size_t offset = 0;
  Mat matrix;  // real symmetric, dim <= 2 for electron spin 1/2
};

struct BlockHamiltonian {
  ProductBasis basis;
  std::vector<HamiltonianBlock> blocks;

  /// Embeds the blocks into the full dense matrix (ProductBasis order).
  Mat to_full() const;

  const HamiltonianBlock& block_of(HalfInteger m) const;
};

/// <m_S m_I|H|m_S m_I>/A = f·m_S·m_I + B·(m_S·a' + m_I·b').
double diagonal_element(HalfInteger m_S, HalfInteger m_I,
                        const FieldPoint& point, const AtomParams& atom);

/// Direct basis-ordered fill: diagonal from diagonal_element, off-diagonal
/// (f/2)·sqrt((S-m_S)(S+m_S+1))·sqrt((I+m_I)(I-m_I+1)) between |m_S,m_I> and
/// |m_S+1,m_I-1>. The f scale multiplies the whole hyperfine term.
BlockHamiltonian build_hamiltonian(const AtomParams& atom,
                                   const FieldPoint& point);

/// Independent construction through operator Kronecker products,
/// f·(Sx⊗Ix + Sy⊗Iy + Sz⊗Iz) + B·(a'·Sz⊗1 + b'·1⊗Iz), permuted into the
/// ProductBasis ordering. Serves as the structural cross-check for
/// build_hamiltonian; the two must agree entrywise.
Mat build_full_hamiltonian(const AtomParams& atom, const FieldPoint& point);

/// Field along n̂(θ,φ): f·ΣSk⊗Ik + B·(a'·n̂·S⊗1 + b'·1⊗n̂·I), dense Hermitian,
/// ProductBasis order. Its spectrum is θ,φ-independent; the eigenvectors are
/// the z-axis ones rotated onto the cone.
CMat build_rotated_hamiltonian(const AtomParams& atom, const FieldPoint& point,
                               double theta, double phi);

}  // namespace breitrabi
