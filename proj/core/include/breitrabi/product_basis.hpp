#pragma once

#include <cstddef>
#include <vector>

#include "breitrabi/half_integer.hpp"

namespace breitrabi {

/// Product basis |m_S, m_I> for electron spin 1/2 and nuclear spin I,
/// ordered by strictly non-increasing m = m_S + m_I, and by decreasing m_S
/// within equal m. Equal-m entries are contiguous, which is what makes the
/// Hamiltonian block diagonal in this ordering.
struct ProductBasis {
  struct Entry {
    HalfInteger m_S;
    HalfInteger m_I;
    HalfInteger m() const { return m_S + m_I; }
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  struct BlockRange {
    HalfInteger m;
    std::size_t offset = 0;
    std::size_t dim = 0;
  };

  HalfInteger nuclear_spin;
  std::vector<Entry> entries;
  std::vector<BlockRange> blocks;

  std::size_t size() const { return entries.size(); }
  std::size_t electron_dim() const { return 2; }
  std::size_t nuclear_dim() const {
    return static_cast<std::size_t>(nuclear_spin.twice()) + 1;
  }

  /// Index of |m_S, m_I> in the ordered basis; throws if not a basis state.
  std::size_t index_of(HalfInteger m_S, HalfInteger m_I) const;

  /// Block holding magnetic quantum number m; throws if absent.
  const BlockRange& block_of(HalfInteger m) const;
};

ProductBasis product_basis(HalfInteger nuclear_spin);

}  // namespace breitrabi
