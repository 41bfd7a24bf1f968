#include "breitrabi/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "breitrabi/spin_algebra.hpp"

namespace breitrabi {

namespace {

// Ladder factor sqrt((j-m)(j+m+1)) for J+ acting on |j,m>.
double raise_factor(HalfInteger j, HalfInteger m) {
  return std::sqrt((j.value() - m.value()) * (j.value() + m.value() + 1.0));
}

// Permutation from the Kronecker (m_S-major, decreasing projections) order
// to the ProductBasis (decreasing m) order: perm[basis index] = kron index.
std::vector<std::size_t> kron_to_basis_permutation(const ProductBasis& basis) {
  std::vector<std::size_t> perm(basis.size());
  const std::size_t nI = basis.nuclear_dim();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis.entries[i];
    const std::size_t iS = projection_index(kElectronSpin, e.m_S);
    const std::size_t iI = projection_index(basis.nuclear_spin, e.m_I);
    perm[i] = iS * nI + iI;
  }
  return perm;
}

}  // namespace

Mat BlockHamiltonian::to_full() const {
  Mat full(basis.size(), basis.size());
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.matrix.rows(); ++i)
      for (std::size_t j = 0; j < b.matrix.cols(); ++j)
        full(b.offset + i, b.offset + j) = b.matrix(i, j);
  return full;
}

const HamiltonianBlock& BlockHamiltonian::block_of(HalfInteger m) const {
  for (const auto& b : blocks)
    if (b.m == m) return b;
  throw std::invalid_argument("no Hamiltonian block with m=" + to_string(m));
}

double diagonal_element(HalfInteger m_S, HalfInteger m_I,
                        const FieldPoint& point, const AtomParams& atom) {
  if (!is_valid_projection(kElectronSpin, m_S))
    throw std::invalid_argument("invalid electron projection " + to_string(m_S));
  if (!is_valid_projection(atom.nuclear_spin, m_I))
    throw std::invalid_argument("invalid nuclear projection " + to_string(m_I));
  return point.f * m_S.value() * m_I.value() +
         point.B * (m_S.value() * atom.a_prime + m_I.value() * atom.b_prime);
}

BlockHamiltonian build_hamiltonian(const AtomParams& atom,
                                   const FieldPoint& point) {
  validate(atom);
  BlockHamiltonian h;
  h.basis = product_basis(atom.nuclear_spin);

  for (const auto& range : h.basis.blocks) {
    HamiltonianBlock block;
    block.m = range.m;
    block.offset = range.offset;
    block.matrix = Mat(range.dim, range.dim);
    for (std::size_t i = 0; i < range.dim; ++i) {
      const auto& ei = h.basis.entries[range.offset + i];
      block.matrix(i, i) = diagonal_element(ei.m_S, ei.m_I, point, atom);
      for (std::size_t j = 0; j < range.dim; ++j) {
        const auto& ej = h.basis.entries[range.offset + j];
        // flip-flop term couples |m_S, m_I> to |m_S+1, m_I-1>
        if (ei.m_S == ej.m_S + HalfInteger::from_int(1) &&
            ei.m_I == ej.m_I - HalfInteger::from_int(1)) {
          const double v = 0.5 * point.f * raise_factor(kElectronSpin, ej.m_S) *
                           raise_factor(atom.nuclear_spin, -ej.m_I);
          block.matrix(i, j) = v;
          block.matrix(j, i) = v;
        }
      }
    }
    h.blocks.push_back(std::move(block));
  }
  return h;
}

Mat build_full_hamiltonian(const AtomParams& atom, const FieldPoint& point) {
  validate(atom);
  const auto basis = product_basis(atom.nuclear_spin);
  const auto S = spin_operators(kElectronSpin);
  const auto I = spin_operators(atom.nuclear_spin);
  const Mat idS = Mat::identity(S.dimension());
  const Mat idI = Mat::identity(I.dimension());

  // Sy⊗Iy has real entries: (i a)(i b) = -a b with a, b real
  const std::size_t nS = S.dimension(), nI = I.dimension();
  Mat syiy(nS * nI, nS * nI);
  for (std::size_t i = 0; i < nS; ++i)
    for (std::size_t j = 0; j < nS; ++j)
      for (std::size_t p = 0; p < nI; ++p)
        for (std::size_t q = 0; q < nI; ++q)
          syiy(i * nI + p, j * nI + q) =
              -(S.Jy(i, j).imag() * I.Jy(p, q).imag());

  Mat kron_order = point.f * (kron(S.Jx, I.Jx) + syiy + kron(S.Jz, I.Jz)) +
                   (point.B * atom.a_prime) * kron(S.Jz, idI) +
                   (point.B * atom.b_prime) * kron(idS, I.Jz);

  const auto perm = kron_to_basis_permutation(basis);
  Mat full(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      full(i, j) = kron_order(perm[i], perm[j]);
  return full;
}

CMat build_rotated_hamiltonian(const AtomParams& atom, const FieldPoint& point,
                               double theta, double phi) {
  validate(atom);
  const auto basis = product_basis(atom.nuclear_spin);
  const auto S = spin_operators(kElectronSpin);
  const auto I = spin_operators(atom.nuclear_spin);

  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);

  auto axis_projection = [&](const SpinOperatorSet& ops) {
    CMat m = to_complex(nx * ops.Jx + nz * ops.Jz);
    CMat y = ops.Jy;
    y *= Complex(ny, 0.0);
    m += y;
    return m;
  };

  const CMat nS_op = axis_projection(S);
  const CMat nI_op = axis_projection(I);
  const CMat idS = CMat::identity(S.dimension());
  const CMat idI = CMat::identity(I.dimension());

  CMat kron_order = kron(to_complex(S.Jx), to_complex(I.Jx));
  kron_order += kron(S.Jy, I.Jy);
  kron_order += kron(to_complex(S.Jz), to_complex(I.Jz));
  kron_order *= Complex(point.f, 0.0);
  {
    CMat zeeman = kron(nS_op, idI);
    zeeman *= Complex(point.B * atom.a_prime, 0.0);
    kron_order += zeeman;
  }
  {
    CMat zeeman = kron(idS, nI_op);
    zeeman *= Complex(point.B * atom.b_prime, 0.0);
    kron_order += zeeman;
  }

  const auto perm = kron_to_basis_permutation(basis);
  CMat full(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      full(i, j) = kron_order(perm[i], perm[j]);
  return full;
}

}  // namespace breitrabi
