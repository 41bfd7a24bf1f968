#pragma once

#include <optional>
#include <string>
#include <vector>

#include "breitrabi/eigensolver.hpp"
#include "breitrabi/hamiltonian.hpp"

namespace breitrabi {

/// Branch within a Δm block: `single` for 1x1 blocks, `minus`/`plus` for the
/// lower/upper level of a 2x2 block.
enum class Branch { single, minus, plus };

/// Stable level identity (m, branch). Identities, not energy order, keep the
/// spectrum curves continuous through crossings.
struct LevelId {
  HalfInteger m;
  Branch branch = Branch::single;
  friend bool operator==(const LevelId&, const LevelId&) = default;
};

/// Canonical column order: decreasing m, plus branch before minus.
bool canonical_less(const LevelId& a, const LevelId& b);

std::string to_string(const LevelId& id);           // "m=+1", "m=0,-"
std::optional<LevelId> parse_level_id(const std::string& text);

struct EigenLevel {
  LevelId id;
  double energy = 0.0;               // E/A
  std::vector<double> amplitudes;    // over the full ProductBasis
  std::optional<double> alpha;       // mixing angle, 2x2 blocks only

  /// (cos α/2, sin α/2) convention: plus branch in the block basis ordering.
};

/// Full spectral decomposition of one real-symmetric block via Jacobi
/// rotations; eigenvalues ascending.
SymmetricEigen eigensolve_block(const Mat& block);

/// Exact levels for I = 1/2: product states E_{±1} plus the m=0 doublet with
/// mixing angle α = atan2(f, (a'-b')B). Rejects I != 1/2.
std::vector<EigenLevel> hydrogen_closed_form(const AtomParams& atom,
                                             const FieldPoint& point);

/// Exact levels for I = 3/2: E_{±2} product states plus three 2x2 doublets.
/// Mixing angles are atan2(2·offdiag, diag-difference) in block basis order.
/// Rejects I != 3/2.
std::vector<EigenLevel> sodium_closed_form(const AtomParams& atom,
                                           const FieldPoint& point);

bool has_closed_form(const AtomParams& atom);

/// Closed form when available (I in {1/2, 3/2}), throws otherwise.
std::vector<EigenLevel> closed_form_levels(const AtomParams& atom,
                                           const FieldPoint& point);

/// Jacobi diagonalization of every block; branch labels by energy order
/// within the block, eigenvector signs fixed deterministically.
std::vector<EigenLevel> numeric_levels(const AtomParams& atom,
                                       const FieldPoint& point);

/// Closed form when available, numeric otherwise. Result sorted canonically.
std::vector<EigenLevel> labeled_levels(const AtomParams& atom,
                                       const FieldPoint& point);

struct SpectrumTable {
  std::vector<double> grid;                   // swept B values
  double f = 1.0;
  std::vector<LevelId> ids;                   // canonical column order
  std::vector<std::vector<double>> energies;  // [point][column]
  std::vector<double> gap;                    // ground gap per point
};

/// Sweeps B over [lo, hi] with n_points >= 2 at fixed f. Levels are tracked
/// by identity; without closed forms identity is carried point-to-point by
/// maximal eigenvector overlap, and an ambiguous match (two overlaps within
/// 1e-6) throws, naming the grid point.
SpectrumTable spectrum_sweep(const AtomParams& atom, double B_lo, double B_hi,
                             int n_points, double f);

/// Minimal-energy level of a computed set; exact ties prefer larger |m|,
/// then positive m.
const EigenLevel& ground_of(const std::vector<EigenLevel>& levels);

/// E_first_excited - E_ground >= 0 of a computed set.
double gap_of(const std::vector<EigenLevel>& levels);

/// Minimal-energy level; exact ties prefer larger |m|, then positive m.
EigenLevel ground_state(const AtomParams& atom, const FieldPoint& point);

/// E_first_excited - E_ground >= 0.
double energy_gap(const AtomParams& atom, const FieldPoint& point);

/// Level with the given identity; throws when the identity does not exist
/// for this atom.
EigenLevel level_by_id(const AtomParams& atom, const FieldPoint& point,
                       const LevelId& id);

}  // namespace breitrabi
