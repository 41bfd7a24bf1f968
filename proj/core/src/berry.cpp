#include "breitrabi/berry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "breitrabi/eigensolver.hpp"
#include "breitrabi/hamiltonian.hpp"
#include "breitrabi/spin_algebra.hpp"

namespace breitrabi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSharpTolerance = 1e-10;
constexpr double kLoopGapFloor = 1e-8;

/// Projection quantum number of a subsystem vector with a single nonzero
/// component; nullopt for genuine superpositions.
std::optional<HalfInteger> sharp_projection(const std::vector<Complex>& vec,
                                            HalfInteger j) {
  const auto ms = projections(j);
  std::optional<HalfInteger> found;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (std::abs(vec[i]) > kSharpTolerance) {
      if (found) return std::nullopt;
      found = ms[i];
    }
  }
  return found;
}

double schmidt_basis_phase(const std::vector<Complex>& vec, HalfInteger j,
                           double omega) {
  const auto m = sharp_projection(vec, j);
  if (!m)
    throw std::invalid_argument(
        "Schmidt vector is a superposition across projections; the closed "
        "form cannot assign its loop phase, use the numeric path");
  return basis_phase(j, *m, omega);
}

std::vector<SchmidtPhase> schmidt_phases(const SchmidtDecomposition& dec,
                                         double omega,
                                         HalfInteger nuclear_spin) {
  std::vector<SchmidtPhase> out;
  out.reserve(dec.term_count());
  for (std::size_t i = 0; i < dec.term_count(); ++i) {
    SchmidtPhase ph;
    ph.p = dec.coefficients[i];
    ph.electron =
        schmidt_basis_phase(dec.electron_vectors[i], kElectronSpin, omega);
    ph.nuclear =
        schmidt_basis_phase(dec.nuclear_vectors[i], nuclear_spin, omega);
    out.push_back(ph);
  }
  return out;
}

double arg_of_weighted_sum(const std::vector<SchmidtPhase>& phases,
                           Subsystem subsystem) {
  Complex z{};
  for (const auto& ph : phases)
    z += ph.p * std::polar(1.0, subsystem == Subsystem::electron ? ph.electron
                                                                 : ph.nuclear);
  return wrap_angle(std::arg(z));
}

}  // namespace

double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);  // lands in [-π, π]
  if (y <= -kPi) y = kPi;
  return y;
}

double solid_angle(double theta) {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("cone angle must lie in [0, π]");
  return 2.0 * kPi * (1.0 - std::cos(theta));
}

double basis_phase(HalfInteger j, HalfInteger m, double omega) {
  if (!is_valid_projection(j, m))
    throw std::invalid_argument("m=" + to_string(m) +
                                " is not a projection of j=" + to_string(j));
  return -m.value() * omega;
}

double total_phase_analytic(const EigenLevel& level, double omega) {
  return -level.id.m.value() * omega;
}

double marginal_phase(const SchmidtDecomposition& schmidt, Subsystem subsystem,
                      double omega, HalfInteger nuclear_spin) {
  return arg_of_weighted_sum(schmidt_phases(schmidt, omega, nuclear_spin),
                             subsystem);
}

double average_phase(const SchmidtDecomposition& schmidt, Subsystem subsystem,
                     double omega, HalfInteger nuclear_spin) {
  double s = 0.0;
  for (const auto& ph : schmidt_phases(schmidt, omega, nuclear_spin))
    s += ph.p * (subsystem == Subsystem::electron ? ph.electron : ph.nuclear);
  return s;
}

BerryResult berry_result(const AtomParams& atom, const FieldPoint& point,
                         const LevelId& id, double theta) {
  const auto basis = product_basis(atom.nuclear_spin);
  const EigenLevel level = level_by_id(atom, point, id);
  const SchmidtDecomposition dec = schmidt(level.amplitudes, basis);

  BerryResult r;
  r.omega = solid_angle(theta);
  r.total_raw = total_phase_analytic(level, r.omega);
  r.total_reduced = wrap_angle(r.total_raw);
  r.per_schmidt = schmidt_phases(dec, r.omega, atom.nuclear_spin);
  r.marginal_electron = arg_of_weighted_sum(r.per_schmidt, Subsystem::electron);
  r.marginal_nuclear = arg_of_weighted_sum(r.per_schmidt, Subsystem::nuclear);
  r.average_electron = 0.0;
  r.average_nuclear = 0.0;
  for (const auto& ph : r.per_schmidt) {
    r.average_electron += ph.p * ph.electron;
    r.average_nuclear += ph.p * ph.nuclear;
  }
  return r;
}

namespace {

struct TrackedLoopState {
  std::vector<Complex> vector;
  double value = 0.0;
};

/// Eigenpair of H(θ, φ) continuing `previous`; checks the non-degeneracy
/// floor and reports φ and the offending gap on violation.
TrackedLoopState tracked_eigenstate(const AtomParams& atom,
                                    const FieldPoint& point, double theta,
                                    double phi,
                                    const std::vector<Complex>& previous) {
  const CMat h = build_rotated_hamiltonian(atom, point, theta, phi);
  const HermitianEigen eig = jacobi_eigensolve(h);
  const std::size_t n = eig.values.size();

  std::size_t best = 0;
  double best_ov = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex ov{};
    for (std::size_t i = 0; i < n; ++i)
      ov += std::conj(previous[i]) * eig.vectors(i, k);
    if (std::abs(ov) > best_ov) {
      best_ov = std::abs(ov);
      best = k;
    }
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k)
    if (k != best)
      min_gap = std::min(min_gap, std::abs(eig.values[k] - eig.values[best]));
  if (min_gap <= kLoopGapFloor) {
    std::ostringstream msg;
    msg << "degeneracy on the loop at phi=" << phi << ": gap " << min_gap
        << " below " << kLoopGapFloor;
    throw std::runtime_error(msg.str());
  }

  TrackedLoopState out;
  out.value = eig.values[best];
  out.vector.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.vector[i] = eig.vectors(i, best);
  return out;
}

/// Target vector at φ=0: the z-quantized level carried onto the cone by the
/// subsystem rotations.
std::vector<Complex> rotated_level_vector(const AtomParams& atom,
                                          const FieldPoint& point,
                                          const LevelId& id, double theta) {
  const EigenLevel level = level_by_id(atom, point, id);
  const CMat u = kron(rotation_matrix(kElectronSpin, theta, 0.0),
                      rotation_matrix(atom.nuclear_spin, theta, 0.0));
  // the rotation acts in m_S-major (Kronecker) order; permute in and out
  const auto basis = product_basis(atom.nuclear_spin);
  const std::size_t nI = basis.nuclear_dim();
  std::vector<Complex> kron_state(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis.entries[i];
    kron_state[projection_index(kElectronSpin, e.m_S) * nI +
               projection_index(basis.nuclear_spin, e.m_I)] =
        level.amplitudes[i];
  }
  const auto rotated = matvec(u, kron_state);
  std::vector<Complex> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis.entries[i];
    out[i] = rotated[projection_index(kElectronSpin, e.m_S) * nI +
                     projection_index(basis.nuclear_spin, e.m_I)];
  }
  return out;
}

void check_loop(const LoopSpec& loop) {
  if (loop.steps < 3)
    throw std::invalid_argument("loop needs at least 3 steps");
  if (loop.theta < 0.0 || loop.theta > kPi)
    throw std::invalid_argument("cone angle must lie in [0, π]");
}

}  // namespace

double berry_phase_numeric(const AtomParams& atom, const LoopSpec& loop,
                           const LevelId& id) {
  check_loop(loop);
  const FieldPoint point{loop.B, loop.f};
  const std::vector<Complex> target =
      rotated_level_vector(atom, point, id, loop.theta);

  std::vector<std::vector<Complex>> vectors;
  vectors.reserve(loop.steps);
  std::vector<Complex> previous = target;
  for (int k = 0; k < loop.steps; ++k) {
    const double phi = 2.0 * kPi * static_cast<double>(k) /
                       static_cast<double>(loop.steps);
    TrackedLoopState state =
        tracked_eigenstate(atom, point, loop.theta, phi, previous);
    previous = state.vector;
    vectors.push_back(std::move(state.vector));
  }

  Complex product{1.0, 0.0};
  for (int k = 0; k < loop.steps; ++k)
    product *= vdot(vectors[k], vectors[(k + 1) % loop.steps]);
  return -std::arg(product);
}

NumericMarginal marginal_phase_numeric(const AtomParams& atom,
                                       const LoopSpec& loop,
                                       const LevelId& id) {
  check_loop(loop);
  const FieldPoint point{loop.B, loop.f};
  const auto basis = product_basis(atom.nuclear_spin);
  const std::vector<Complex> target =
      rotated_level_vector(atom, point, id, loop.theta);

  // Schmidt vectors of the tracked eigenstate at every azimuth. The
  // coefficients are azimuth independent; vectors are matched to the φ=0
  // ordering by overlap so their Wilson loops stay coherent. A degenerate
  // Schmidt spectrum (p1 = p2) leaves the decomposition ambiguous; the
  // field-frame electron basis is the continuity limit of p1 -> p2 and is
  // substituted there.
  auto field_frame_schmidt = [&](const std::vector<Complex>& psi, double phi) {
    const CMat u = rotation_matrix(kElectronSpin, loop.theta, phi);
    SchmidtDecomposition dec;
    for (std::size_t col = 0; col < 2; ++col) {
      std::vector<Complex> e_vec = {u(0, col), u(1, col)};
      std::vector<Complex> f_vec(basis.nuclear_dim());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& entry = basis.entries[k];
        f_vec[projection_index(basis.nuclear_spin, entry.m_I)] +=
            std::conj(e_vec[projection_index(kElectronSpin, entry.m_S)]) *
            psi[k];
      }
      const double p = norm2(f_vec) * norm2(f_vec);
      const double inv = 1.0 / std::sqrt(p);
      for (auto& c : f_vec) c *= inv;
      dec.coefficients.push_back(p);
      dec.electron_vectors.push_back(std::move(e_vec));
      dec.nuclear_vectors.push_back(std::move(f_vec));
    }
    return dec;
  };

  std::vector<Complex> previous = target;
  SchmidtDecomposition first;
  std::vector<std::vector<std::vector<Complex>>> e_tracks, f_tracks;
  for (int k = 0; k < loop.steps; ++k) {
    const double phi = 2.0 * kPi * static_cast<double>(k) /
                       static_cast<double>(loop.steps);
    TrackedLoopState state =
        tracked_eigenstate(atom, point, loop.theta, phi, previous);
    previous = state.vector;
    SchmidtDecomposition dec = schmidt(state.vector, basis);
    if (dec.term_count() == 2 &&
        std::abs(dec.coefficients[0] - dec.coefficients[1]) <= 1e-9)
      dec = field_frame_schmidt(state.vector, phi);
    if (k == 0) {
      first = dec;
      e_tracks.resize(dec.term_count());
      f_tracks.resize(dec.term_count());
    }
    if (dec.term_count() != first.term_count())
      throw std::runtime_error("Schmidt rank changed along the loop");
    // match Schmidt terms to the first step's ordering
    std::vector<bool> used(dec.term_count(), false);
    for (std::size_t a = 0; a < first.term_count(); ++a) {
      const auto& ref = e_tracks[a].empty() ? first.electron_vectors[a]
                                            : e_tracks[a].back();
      double best = -1.0;
      std::size_t arg = 0;
      for (std::size_t b = 0; b < dec.term_count(); ++b) {
        if (used[b]) continue;
        const double ov = std::abs(vdot(ref, dec.electron_vectors[b]));
        if (ov > best) {
          best = ov;
          arg = b;
        }
      }
      used[arg] = true;
      e_tracks[a].push_back(dec.electron_vectors[arg]);
      f_tracks[a].push_back(dec.nuclear_vectors[arg]);
    }
  }

  auto loop_phase = [&](const std::vector<std::vector<Complex>>& track) {
    Complex product{1.0, 0.0};
    for (std::size_t k = 0; k < track.size(); ++k)
      product *= vdot(track[k], track[(k + 1) % track.size()]);
    return -std::arg(product);
  };

  Complex ze{}, zn{};
  for (std::size_t a = 0; a < first.term_count(); ++a) {
    ze += first.coefficients[a] * std::polar(1.0, loop_phase(e_tracks[a]));
    zn += first.coefficients[a] * std::polar(1.0, loop_phase(f_tracks[a]));
  }
  return {wrap_angle(std::arg(ze)), wrap_angle(std::arg(zn))};
}

MarginalScan marginal_phase_scan(const AtomParams& atom, const LevelId& id,
                                 const std::vector<double>& B_grid,
                                 const std::vector<double>& theta_grid,
                                 double f) {
  if (B_grid.empty() || theta_grid.empty())
    throw std::invalid_argument("marginal_phase_scan needs nonempty grids");
  const auto basis = product_basis(atom.nuclear_spin);

  MarginalScan scan;
  scan.B_grid = B_grid;
  scan.theta_grid = theta_grid;
  scan.gamma_electron.resize(B_grid.size() * theta_grid.size());
  scan.gamma_nuclear.resize(scan.gamma_electron.size());

  // Schmidt data depends on B only; phases fold in Ω per θ row
  std::vector<std::vector<SchmidtPhase>> raw(B_grid.size());
  for (std::size_t bi = 0; bi < B_grid.size(); ++bi) {
    const EigenLevel level = level_by_id(atom, {B_grid[bi], f}, id);
    const SchmidtDecomposition dec = schmidt(level.amplitudes, basis);
    raw[bi] = schmidt_phases(dec, 1.0, atom.nuclear_spin);  // per unit Ω
  }
  for (std::size_t ti = 0; ti < theta_grid.size(); ++ti) {
    const double omega = solid_angle(theta_grid[ti]);
    for (std::size_t bi = 0; bi < B_grid.size(); ++bi) {
      std::vector<SchmidtPhase> phases = raw[bi];
      for (auto& ph : phases) {
        ph.electron *= omega;
        ph.nuclear *= omega;
      }
      const std::size_t c = scan.cell(ti, bi);
      scan.gamma_electron[c] = arg_of_weighted_sum(phases, Subsystem::electron);
      scan.gamma_nuclear[c] = arg_of_weighted_sum(phases, Subsystem::nuclear);
    }
  }

  auto extract_nodes = [&](const std::vector<double>& gamma) {
    std::vector<std::vector<double>> nodes(theta_grid.size());
    constexpr double kZeroBand = 1e-12;
    for (std::size_t ti = 0; ti < theta_grid.size(); ++ti) {
      bool in_zero_run = false;
      double run_start = 0.0, run_end = 0.0;
      for (std::size_t bi = 0; bi < B_grid.size(); ++bi) {
        const double g = gamma[scan.cell(ti, bi)];
        if (std::abs(g) <= kZeroBand) {
          if (!in_zero_run) {
            in_zero_run = true;
            run_start = B_grid[bi];
          }
          run_end = B_grid[bi];
          continue;
        }
        if (in_zero_run) {
          nodes[ti].push_back(0.5 * (run_start + run_end));
          in_zero_run = false;
        }
        if (bi > 0) {
          const double gp = gamma[scan.cell(ti, bi - 1)];
          // sign change through zero, not through the ±π cut
          if (std::abs(gp) > kZeroBand && (gp < 0) != (g < 0) &&
              std::abs(g - gp) < kPi) {
            const double t = gp / (gp - g);
            nodes[ti].push_back(B_grid[bi - 1] +
                                t * (B_grid[bi] - B_grid[bi - 1]));
          }
        }
      }
      if (in_zero_run) nodes[ti].push_back(0.5 * (run_start + run_end));
    }
    return nodes;
  };
  scan.electron_nodes = extract_nodes(scan.gamma_electron);
  scan.nuclear_nodes = extract_nodes(scan.gamma_nuclear);
  return scan;
}

}  // namespace breitrabi
