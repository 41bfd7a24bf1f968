#include "breitrabi/product_basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "breitrabi/atom.hpp"

namespace breitrabi {

std::size_t ProductBasis::index_of(HalfInteger m_S, HalfInteger m_I) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].m_S == m_S && entries[i].m_I == m_I) return i;
  throw std::invalid_argument("|" + to_string(m_S) + "," + to_string(m_I) +
                              "> is not a basis state");
}

const ProductBasis::BlockRange& ProductBasis::block_of(HalfInteger m) const {
  for (const auto& b : blocks)
    if (b.m == m) return b;
  throw std::invalid_argument("no block with m=" + to_string(m));
}

ProductBasis product_basis(HalfInteger nuclear_spin) {
  if (nuclear_spin.twice() < 1)
    throw std::invalid_argument("nuclear spin I must be >= 1/2");

  ProductBasis basis;
  basis.nuclear_spin = nuclear_spin;
  for (HalfInteger m_S : projections(kElectronSpin))
    for (HalfInteger m_I : projections(nuclear_spin))
      basis.entries.push_back({m_S, m_I});

  std::stable_sort(basis.entries.begin(), basis.entries.end(),
                   [](const ProductBasis::Entry& a, const ProductBasis::Entry& b) {
                     if (a.m() != b.m()) return a.m() > b.m();
                     return a.m_S > b.m_S;
                   });

  for (std::size_t i = 0; i < basis.entries.size();) {
    std::size_t j = i;
    while (j < basis.entries.size() && basis.entries[j].m() == basis.entries[i].m())
      ++j;
    basis.blocks.push_back({basis.entries[i].m(), i, j - i});
    i = j;
  }
  return basis;
}

}  // namespace breitrabi
