#pragma once

#include <vector>

#include "breitrabi/entanglement.hpp"
#include "breitrabi/spectra.hpp"

namespace breitrabi {

/// One adiabatic cone loop: the field direction n̂ keeps polar angle theta
/// and swings the azimuth through a full turn, discretized in `steps` points.
struct LoopSpec {
  double theta = 0.0;  // radians, in [0, π]
  double B = 0.0;      // tesla
  double f = 1.0;
  int steps = 1000;    // >= 3
};

/// Wraps into (-π, π].
double wrap_angle(double x);

/// Ω = 2π(1 - cosθ), the area the cone encloses on the unit sphere.
double solid_angle(double theta);

/// Geometric phase -m·Ω accumulated by a sharp |j,m> state carried around
/// the cone. Unreduced; callers reduce when reporting.
double basis_phase(HalfInteger j, HalfInteger m, double omega);

/// Total phase of a z-quantized level: -m·Ω, unreduced.
double total_phase_analytic(const EigenLevel& level, double omega);

/// Γ_A = arg Σ_i p_i exp(i β_i^A) in (-π, π]. Each Schmidt vector must carry
/// a sharp projection quantum number (one nonzero component); superpositions
/// are rejected since the closed form cannot assign β_i^A to them.
double marginal_phase(const SchmidtDecomposition& schmidt, Subsystem subsystem,
                      double omega, HalfInteger nuclear_spin);

/// β̄_A = Σ_i p_i β_i^A, unreduced.
double average_phase(const SchmidtDecomposition& schmidt, Subsystem subsystem,
                     double omega, HalfInteger nuclear_spin);

struct SchmidtPhase {
  double p = 0.0;
  double electron = 0.0;  // β_i^e, unreduced
  double nuclear = 0.0;   // β_i^n, unreduced
};

struct BerryResult {
  double omega = 0.0;
  double total_raw = 0.0;        // -m·Ω
  double total_reduced = 0.0;    // in (-π, π]
  double marginal_electron = 0.0;
  double marginal_nuclear = 0.0;
  double average_electron = 0.0;
  double average_nuclear = 0.0;
  std::vector<SchmidtPhase> per_schmidt;
};

/// All closed-form phases of one level for a cone of angle theta.
BerryResult berry_result(const AtomParams& atom, const FieldPoint& point,
                         const LevelId& id, double theta);

/// Discrete Wilson loop: -arg Π_k <ψ(φ_k)|ψ(φ_{k+1})> with φ_N ≡ φ_0 and
/// eigenvectors of the rotated Hamiltonian, gauge invariant by construction.
/// Result lies in (-π, π]. Throws when the tracked level comes within 1e-8
/// of a neighbor anywhere on the loop, naming the azimuth and the gap.
double berry_phase_numeric(const AtomParams& atom, const LoopSpec& loop,
                           const LevelId& id);

/// Wilson loops of the individual Schmidt vectors, combined into numeric
/// marginal phases; independent cross-check of marginal_phase.
struct NumericMarginal {
  double electron = 0.0;
  double nuclear = 0.0;
};
NumericMarginal marginal_phase_numeric(const AtomParams& atom,
                                       const LoopSpec& loop, const LevelId& id);

struct MarginalScan {
  std::vector<double> B_grid;
  std::vector<double> theta_grid;
  // row-major over [theta index][B index]
  std::vector<double> gamma_electron;
  std::vector<double> gamma_nuclear;
  // per theta row: B locations where the phase crosses zero
  std::vector<std::vector<double>> electron_nodes;
  std::vector<std::vector<double>> nuclear_nodes;

  std::size_t cell(std::size_t ti, std::size_t bi) const {
    return ti * B_grid.size() + bi;
  }
};

/// Marginal phases of one level over a (B, θ) grid with per-row nodal sets.
MarginalScan marginal_phase_scan(const AtomParams& atom, const LevelId& id,
                                 const std::vector<double>& B_grid,
                                 const std::vector<double>& theta_grid,
                                 double f = 1.0);

}  // namespace breitrabi
