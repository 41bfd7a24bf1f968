#include "breitrabi/crossings.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "breitrabi/entanglement.hpp"

namespace breitrabi {

namespace {

constexpr double kBisectTolerance = 1e-12;
constexpr double kGoldenTolerance = 1e-10;

FieldPoint at(SweepParameter axis, double x, double fixed) {
  return axis == SweepParameter::field ? FieldPoint{x, fixed}
                                       : FieldPoint{fixed, x};
}

// golden-section minimizer on [lo, hi]
double golden_min(const std::function<double(double)>& fn, double lo,
                  double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("linspace needs n >= 1");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i)
    out[i] = std::lerp(lo, hi,
                       static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

std::vector<CrossingEvent> find_real_crossings(const AtomParams& atom,
                                               SweepParameter axis,
                                               const SweepWindow& window,
                                               const LevelId& a,
                                               const LevelId& b) {
  if (a.m == b.m)
    throw std::invalid_argument(
        "find_real_crossings needs levels from different m blocks; a same-m "
        "degeneracy is an avoided-crossing question");
  if (window.n_points < 2)
    throw std::invalid_argument("sweep window needs n_points >= 2");

  auto diff = [&](double x) {
    const FieldPoint p = at(axis, x, window.fixed);
    return level_by_id(atom, p, a).energy - level_by_id(atom, p, b).energy;
  };

  const auto grid = linspace(window.lo, window.hi, window.n_points);
  std::vector<CrossingEvent> events;
  auto emit = [&](double x, double d) {
    events.push_back({CrossingEvent::Kind::real, axis, x, a, b, std::abs(d)});
  };

  double prev = diff(grid[0]);
  if (prev == 0.0) emit(grid[0], 0.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double cur = diff(grid[i]);
    if (cur == 0.0) {
      emit(grid[i], 0.0);
      prev = cur;
      continue;
    }
    if ((prev < 0) != (cur < 0) && prev != 0.0) {
      double lo = grid[i - 1], hi = grid[i];
      double flo = prev;
      double mid = 0.5 * (lo + hi), fmid = diff(mid);
      while (hi - lo > kBisectTolerance && std::abs(fmid) > kBisectTolerance) {
        if ((fmid < 0) == (flo < 0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
        mid = 0.5 * (lo + hi);
        fmid = diff(mid);
      }
      emit(mid, fmid);
    }
    prev = cur;
  }
  return events;
}

std::vector<CrossingEvent> find_avoided_crossings(const AtomParams& atom,
                                                  SweepParameter axis,
                                                  const SweepWindow& window,
                                                  HalfInteger block_m) {
  if (window.n_points < 3)
    throw std::invalid_argument("avoided-crossing scan needs n_points >= 3");
  {
    const auto basis = product_basis(atom.nuclear_spin);
    if (basis.block_of(block_m).dim != 2)
      throw std::invalid_argument("block m=" + to_string(block_m) +
                                  " is not 2-dimensional");
  }

  auto block_gap = [&](double x) {
    const BlockHamiltonian h = build_hamiltonian(atom, at(axis, x, window.fixed));
    const Mat& blk = h.block_of(block_m).matrix;
    return std::hypot(blk(0, 0) - blk(1, 1), 2.0 * blk(0, 1));
  };

  const auto grid = linspace(window.lo, window.hi, window.n_points);
  std::vector<double> gap(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) gap[i] = block_gap(grid[i]);

  // The squared gap is exactly quadratic along either sweep axis (diagonal
  // difference linear, coupling constant or linear with the other zero), so
  // one parabolic-vertex step lifts the golden-section result off the
  // sqrt(eps) comparison floor.
  auto parabolic_polish = [&](double x) {
    const double h = 1e-6 * (1.0 + std::abs(x));
    const double gl = block_gap(x - h), gc = block_gap(x), gr = block_gap(x + h);
    const double denom = (gl * gl - 2.0 * gc * gc + gr * gr);
    if (denom <= 0.0) return x;
    const double step = 0.5 * h * (gl * gl - gr * gr) / denom;
    return std::abs(step) <= h ? x + step : x;
  };

  const LevelId upper{block_m, Branch::plus};
  const LevelId lower{block_m, Branch::minus};
  std::vector<CrossingEvent> events;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (gap[i] < gap[i - 1] && gap[i] <= gap[i + 1]) {
      double x = golden_min(block_gap, grid[i - 1], grid[i + 1], kGoldenTolerance);
      x = parabolic_polish(x);
      const double g = block_gap(x);
      const auto kind = g <= kRealCrossingGap ? CrossingEvent::Kind::real
                                              : CrossingEvent::Kind::avoided;
      events.push_back({kind, axis, x, upper, lower, g});
    }
  }
  return events;
}

PhaseDiagram phase_diagram(const AtomParams& atom,
                           const std::vector<double>& f_grid,
                           const std::vector<double>& B_grid) {
  if (f_grid.empty() || B_grid.empty())
    throw std::invalid_argument("phase_diagram needs nonempty grids");
  validate(atom);

  PhaseDiagram pd;
  pd.f_grid = f_grid;
  pd.B_grid = B_grid;
  pd.ground_m_twice.resize(f_grid.size() * B_grid.size());
  pd.gap.resize(pd.ground_m_twice.size());
  pd.entropy.resize(pd.ground_m_twice.size());

  const auto basis = product_basis(atom.nuclear_spin);
  for (std::size_t fi = 0; fi < f_grid.size(); ++fi) {
    for (std::size_t bi = 0; bi < B_grid.size(); ++bi) {
      const FieldPoint point{B_grid[bi], f_grid[fi]};
      const auto levels = labeled_levels(atom, point);
      const EigenLevel& ground = ground_of(levels);
      const std::size_t c = pd.cell(fi, bi);
      pd.ground_m_twice[c] = ground.id.m.twice();
      pd.gap[c] = gap_of(levels);
      pd.entropy[c] = state_entropy(ground.amplitudes, basis);
    }
  }
  return pd;
}

}  // namespace breitrabi
