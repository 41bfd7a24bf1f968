#pragma once

#include <vector>

#include "breitrabi/spectra.hpp"

namespace breitrabi {

/// The one-parameter axis a detector sweeps: the field B or the hyperfine
/// scale f.
enum class SweepParameter { field, scale };

struct CrossingEvent {
  enum class Kind { real, avoided };
  Kind kind = Kind::real;
  SweepParameter parameter = SweepParameter::field;
  double location = 0.0;      // tesla for field sweeps, dimensionless for f
  LevelId level_a, level_b;
  double gap_at_event = 0.0;  // Δ/A: <= 1e-10 for real crossings
};

/// Minimum gap below which an intra-block event counts as a real degeneracy
/// rather than an avoided crossing.
inline constexpr double kRealCrossingGap = 1e-10;

struct SweepWindow {
  double lo = 0.0;
  double hi = 0.0;
  int n_points = 0;
  double fixed = 0.0;  // the non-swept parameter (f or B)
};

/// Degeneracies of two levels from different m blocks along the sweep. Every
/// sign change of E_a - E_b on the grid is refined by bisection until
/// |E_a - E_b| < 1e-12 or the parameter interval < 1e-12. A same-m pair is
/// rejected: inside a 2x2 block a true degeneracy needs diagonal difference
/// and coupling to vanish together, which is the avoided-crossing detector's
/// job.
std::vector<CrossingEvent> find_real_crossings(const AtomParams& atom,
                                               SweepParameter axis,
                                               const SweepWindow& window,
                                               const LevelId& a,
                                               const LevelId& b);

/// Interior local minima of the gap of a 2-dimensional m block, refined by
/// golden-section search to parameter tolerance 1e-10. A monotone gap yields
/// an empty list. Events with min gap <= 1e-10 are classified real.
std::vector<CrossingEvent> find_avoided_crossings(const AtomParams& atom,
                                                  SweepParameter axis,
                                                  const SweepWindow& window,
                                                  HalfInteger block_m);

struct PhaseDiagram {
  std::vector<double> f_grid;
  std::vector<double> B_grid;
  // row-major over [f index][B index]
  std::vector<int> ground_m_twice;
  std::vector<double> gap;
  std::vector<double> entropy;

  std::size_t cell(std::size_t fi, std::size_t bi) const {
    return fi * B_grid.size() + bi;
  }
};

/// Ground-state m label, gap, and ground-state entanglement entropy per
/// (f, B) cell.
PhaseDiagram phase_diagram(const AtomParams& atom,
                           const std::vector<double>& f_grid,
                           const std::vector<double>& B_grid);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace breitrabi
