#include "breitrabi/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace breitrabi {

namespace {

int branch_rank(Branch b) {
  switch (b) {
    case Branch::single: return 0;
    case Branch::plus: return 1;
    case Branch::minus: return 2;
  }
  return 3;
}

std::vector<double> embedded(const ProductBasis& basis, std::size_t offset,
                             std::initializer_list<double> block_amps) {
  std::vector<double> amps(basis.size(), 0.0);
  std::size_t k = offset;
  for (double a : block_amps) amps[k++] = a;
  return amps;
}

// Closed-form solution of a symmetric 2x2 block [[d1, o], [o, d2]] in block
// basis order. alpha = atan2(2o, d1-d2); plus branch (cos α/2, sin α/2).
struct TwoLevel {
  double e_plus, e_minus, alpha;
  double cos_half, sin_half;
};

TwoLevel solve_two_level(double d1, double d2, double o) {
  TwoLevel t;
  const double d = d1 - d2;
  const double mean = 0.5 * (d1 + d2);
  const double r = 0.5 * std::hypot(d, 2.0 * o);
  t.e_plus = mean + r;
  t.e_minus = mean - r;
  t.alpha = std::atan2(2.0 * o, d);
  // half-angle amplitudes from cos α = d/2r: exact at the decoupled points
  // (o = 0 must leave exact product states)
  if (r == 0.0) {
    t.cos_half = 1.0;
    t.sin_half = 0.0;
  } else {
    const double ca = std::clamp(d / (2.0 * r), -1.0, 1.0);
    t.cos_half = std::sqrt(0.5 * (1.0 + ca));
    t.sin_half = std::copysign(std::sqrt(0.5 * (1.0 - ca)), 2.0 * o);
  }
  return t;
}

void append_doublet(std::vector<EigenLevel>& out, const ProductBasis& basis,
                    HalfInteger m, std::size_t offset, const TwoLevel& t) {
  const double ch = t.cos_half;
  const double sh = t.sin_half;
  out.push_back({{m, Branch::plus}, t.e_plus, embedded(basis, offset, {ch, sh}),
                 t.alpha});
  out.push_back({{m, Branch::minus}, t.e_minus,
                 embedded(basis, offset, {-sh, ch}), t.alpha});
}

void sort_canonical(std::vector<EigenLevel>& levels) {
  std::sort(levels.begin(), levels.end(),
            [](const EigenLevel& a, const EigenLevel& b) {
              return canonical_less(a.id, b.id);
            });
}

}  // namespace

bool canonical_less(const LevelId& a, const LevelId& b) {
  if (a.m != b.m) return a.m > b.m;
  return branch_rank(a.branch) < branch_rank(b.branch);
}

std::string to_string(const LevelId& id) {
  std::string m_text = to_string(id.m);
  if (id.m.twice() > 0) m_text = "+" + m_text;
  std::string out = "m=" + m_text;
  if (id.branch == Branch::plus) out += ",+";
  if (id.branch == Branch::minus) out += ",-";
  return out;
}

std::optional<LevelId> parse_level_id(const std::string& text) {
  if (text.rfind("m=", 0) != 0) return std::nullopt;
  std::string rest = text.substr(2);
  Branch branch = Branch::single;
  if (rest.size() >= 2 && rest[rest.size() - 2] == ',') {
    const char b = rest.back();
    if (b == '+') branch = Branch::plus;
    else if (b == '-') branch = Branch::minus;
    else return std::nullopt;
    rest = rest.substr(0, rest.size() - 2);
  }
  if (rest.empty()) return std::nullopt;
  // accept "3/2", "-1/2", "+1", "0"
  int sign = 1;
  std::size_t pos = 0;
  if (rest[0] == '+' || rest[0] == '-') {
    sign = rest[0] == '-' ? -1 : 1;
    pos = 1;
  }
  std::size_t slash = rest.find('/');
  try {
    if (slash == std::string::npos) {
      const int whole = std::stoi(rest.substr(pos));
      return LevelId{HalfInteger::from_int(sign * whole), branch};
    }
    if (rest.substr(slash + 1) != "2") return std::nullopt;
    const int num = std::stoi(rest.substr(pos, slash - pos));
    return LevelId{HalfInteger::from_twice(sign * num), branch};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SymmetricEigen eigensolve_block(const Mat& block) {
  if (block.rows() != block.cols() || block.rows() > 10)
    throw std::invalid_argument("eigensolve_block expects a square matrix of dimension <= 10");
  return jacobi_eigensolve(block);
}

std::vector<EigenLevel> hydrogen_closed_form(const AtomParams& atom,
                                             const FieldPoint& point) {
  validate(atom);
  if (atom.nuclear_spin != kSpinHalf)
    throw std::invalid_argument("hydrogen closed form requires I=1/2, got I=" +
                                to_string(atom.nuclear_spin));
  const auto basis = product_basis(atom.nuclear_spin);
  const double f = point.f, B = point.B;
  const double ap = atom.a_prime, bp = atom.b_prime;

  std::vector<EigenLevel> out;
  out.push_back({{HalfInteger::from_int(1), Branch::single},
                 0.25 * f + 0.5 * (ap + bp) * B,
                 embedded(basis, 0, {1.0}),
                 std::nullopt});
  // m=0 block over {|1/2,-1/2>, |-1/2,1/2>}
  const TwoLevel t = solve_two_level(-0.25 * f + 0.5 * (ap - bp) * B,
                                     -0.25 * f - 0.5 * (ap - bp) * B, 0.5 * f);
  append_doublet(out, basis, HalfInteger::from_int(0), 1, t);
  out.push_back({{HalfInteger::from_int(-1), Branch::single},
                 0.25 * f - 0.5 * (ap + bp) * B,
                 embedded(basis, 3, {1.0}),
                 std::nullopt});
  sort_canonical(out);
  return out;
}

std::vector<EigenLevel> sodium_closed_form(const AtomParams& atom,
                                           const FieldPoint& point) {
  validate(atom);
  if (atom.nuclear_spin != HalfInteger::from_twice(3))
    throw std::invalid_argument("sodium closed form requires I=3/2, got I=" +
                                to_string(atom.nuclear_spin));
  const auto basis = product_basis(atom.nuclear_spin);
  const double f = point.f, B = point.B;
  const double ap = atom.a_prime, bp = atom.b_prime;
  const double sqrt3 = std::sqrt(3.0);

  std::vector<EigenLevel> out;
  out.push_back({{HalfInteger::from_int(2), Branch::single},
                 0.75 * f + 0.5 * (ap + 3.0 * bp) * B,
                 embedded(basis, 0, {1.0}),
                 std::nullopt});
  // m=+1 over {|1/2,1/2>, |-1/2,3/2>}: diagonal difference f + (a'-b')B,
  // coupling (√3/2)f
  append_doublet(out, basis, HalfInteger::from_int(1), 1,
                 solve_two_level(0.25 * f + 0.5 * (ap + bp) * B,
                                 -0.75 * f - 0.5 * (ap - 3.0 * bp) * B,
                                 0.5 * sqrt3 * f));
  // m=0 over {|1/2,-1/2>, |-1/2,1/2>}: coupling f (not f/2 -- the ladder
  // factors are 1 and 2 here), so the gap is sqrt((a'-b')^2 B^2 + 4 f^2)
  append_doublet(out, basis, HalfInteger::from_int(0), 3,
                 solve_two_level(-0.25 * f + 0.5 * (ap - bp) * B,
                                 -0.25 * f - 0.5 * (ap - bp) * B, f));
  // m=-1 over {|1/2,-3/2>, |-1/2,-1/2>}: diagonal difference -f + (a'-b')B
  append_doublet(out, basis, HalfInteger::from_int(-1), 5,
                 solve_two_level(-0.75 * f + 0.5 * (ap - 3.0 * bp) * B,
                                 0.25 * f - 0.5 * (ap + bp) * B,
                                 0.5 * sqrt3 * f));
  out.push_back({{HalfInteger::from_int(-2), Branch::single},
                 0.75 * f - 0.5 * (ap + 3.0 * bp) * B,
                 embedded(basis, 7, {1.0}),
                 std::nullopt});
  sort_canonical(out);
  return out;
}

bool has_closed_form(const AtomParams& atom) {
  return atom.nuclear_spin == kSpinHalf ||
         atom.nuclear_spin == HalfInteger::from_twice(3);
}

std::vector<EigenLevel> closed_form_levels(const AtomParams& atom,
                                           const FieldPoint& point) {
  if (atom.nuclear_spin == kSpinHalf) return hydrogen_closed_form(atom, point);
  if (atom.nuclear_spin == HalfInteger::from_twice(3))
    return sodium_closed_form(atom, point);
  throw std::invalid_argument("no closed form for I=" +
                              to_string(atom.nuclear_spin));
}

std::vector<EigenLevel> numeric_levels(const AtomParams& atom,
                                       const FieldPoint& point) {
  const BlockHamiltonian h = build_hamiltonian(atom, point);
  std::vector<EigenLevel> out;
  for (const auto& block : h.blocks) {
    const SymmetricEigen eig = eigensolve_block(block.matrix);
    const std::size_t dim = block.matrix.rows();
    std::optional<double> alpha;
    if (dim == 2)
      alpha = std::atan2(2.0 * block.matrix(0, 1),
                         block.matrix(0, 0) - block.matrix(1, 1));
    for (std::size_t k = 0; k < dim; ++k) {
      EigenLevel lvl;
      lvl.id.m = block.m;
      lvl.id.branch = dim == 1 ? Branch::single
                               : (k == 0 ? Branch::minus : Branch::plus);
      lvl.energy = eig.values[k];
      lvl.alpha = dim == 2 ? alpha : std::nullopt;
      lvl.amplitudes.assign(h.basis.size(), 0.0);
      for (std::size_t i = 0; i < dim; ++i)
        lvl.amplitudes[block.offset + i] = eig.vectors(i, k);
      // deterministic sign: largest-magnitude amplitude positive
      std::size_t imax = 0;
      for (std::size_t i = 1; i < lvl.amplitudes.size(); ++i)
        if (std::abs(lvl.amplitudes[i]) > std::abs(lvl.amplitudes[imax]))
          imax = i;
      if (lvl.amplitudes[imax] < 0)
        for (auto& a : lvl.amplitudes) a = -a;
      out.push_back(std::move(lvl));
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<EigenLevel> labeled_levels(const AtomParams& atom,
                                       const FieldPoint& point) {
  return has_closed_form(atom) ? closed_form_levels(atom, point)
                               : numeric_levels(atom, point);
}

double gap_of(const std::vector<EigenLevel>& levels) {
  std::vector<double> e;
  e.reserve(levels.size());
  for (const auto& l : levels) e.push_back(l.energy);
  std::sort(e.begin(), e.end());
  return e.size() > 1 ? e[1] - e[0] : 0.0;
}

const EigenLevel& ground_of(const std::vector<EigenLevel>& levels) {
  if (levels.empty()) throw std::invalid_argument("empty level set");
  const EigenLevel* best = &levels.front();
  for (const auto& l : levels) {
    if (l.energy < best->energy) {
      best = &l;
    } else if (l.energy == best->energy) {
      // exact ties: larger |m| wins, then positive m
      const int la = std::abs(l.id.m.twice()), ba = std::abs(best->id.m.twice());
      if (la > ba || (la == ba && l.id.m.twice() > best->id.m.twice()))
        best = &l;
    }
  }
  return *best;
}

SpectrumTable spectrum_sweep(const AtomParams& atom, double B_lo, double B_hi,
                             int n_points, double f) {
  if (n_points < 2)
    throw std::invalid_argument("spectrum_sweep needs n_points >= 2");
  validate(atom);

  SpectrumTable table;
  table.f = f;
  table.grid.resize(n_points);
  for (int i = 0; i < n_points; ++i)
    table.grid[i] = std::lerp(B_lo, B_hi, static_cast<double>(i) /
                                              static_cast<double>(n_points - 1));

  const bool closed = has_closed_form(atom);
  std::vector<EigenLevel> prev;
  for (int i = 0; i < n_points; ++i) {
    const FieldPoint point{table.grid[i], f};
    std::vector<EigenLevel> levels =
        closed ? closed_form_levels(atom, point) : numeric_levels(atom, point);

    if (!closed && !prev.empty()) {
      // adiabatic continuation: carry identities by maximal overlap
      std::vector<EigenLevel> matched(levels.size());
      std::vector<bool> used(levels.size(), false);
      for (std::size_t a = 0; a < prev.size(); ++a) {
        double best = -1.0, second = -1.0;
        std::size_t arg = 0;
        for (std::size_t b = 0; b < levels.size(); ++b) {
          if (used[b]) continue;
          const double ov = std::abs(dot(prev[a].amplitudes, levels[b].amplitudes));
          if (ov > best) {
            second = best;
            best = ov;
            arg = b;
          } else if (ov > second) {
            second = ov;
          }
        }
        if (second >= 0 && best - second < 1e-6) {
          std::ostringstream msg;
          msg << "ambiguous eigenvector continuation at B=" << table.grid[i]
              << " (overlaps " << best << " and " << second
              << " within 1e-6); refine the grid";
          throw std::runtime_error(msg.str());
        }
        used[arg] = true;
        matched[a] = levels[arg];
        matched[a].id = prev[a].id;
      }
      levels = std::move(matched);
      sort_canonical(levels);
    }

    if (i == 0) {
      table.ids.reserve(levels.size());
      for (const auto& l : levels) table.ids.push_back(l.id);
    }
    std::vector<double> row(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) row[k] = levels[k].energy;
    table.energies.push_back(std::move(row));
    table.gap.push_back(gap_of(levels));
    prev = std::move(levels);
  }
  return table;
}

EigenLevel ground_state(const AtomParams& atom, const FieldPoint& point) {
  return ground_of(labeled_levels(atom, point));
}

double energy_gap(const AtomParams& atom, const FieldPoint& point) {
  return gap_of(labeled_levels(atom, point));
}

EigenLevel level_by_id(const AtomParams& atom, const FieldPoint& point,
                       const LevelId& id) {
  for (auto& l : labeled_levels(atom, point))
    if (l.id == id) return l;
  throw std::invalid_argument("no level " + to_string(id) + " for atom " +
                              atom.name);
}

}  // namespace breitrabi
