#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "breitrabi/berry.hpp"
#include "breitrabi/crossings.hpp"
#include "breitrabi/entanglement.hpp"
#include "breitrabi/version.hpp"

namespace breitrabi::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

std::string atom_comment(const AtomParams& atom) {
  return "atom: " + atom.name + "  I=" + to_string(atom.nuclear_spin) +
         "  a_prime=" + format_double(atom.a_prime) +
         "  b_prime=" + format_double(atom.b_prime) + " (1/T)";
}

std::string tool_comment(const std::string& command) {
  return std::string("breitrabi v") + kVersion + " " + command;
}

void warn_if_f_out_of_bounds(double f) {
  if (const auto w = field_point_warning({0.0, f}))
    std::cerr << "warning: " << *w << "\n";
}

std::filesystem::path with_extension(std::filesystem::path p,
                                     OutputFormat format) {
  if (p.extension().empty())
    p.replace_extension(format == OutputFormat::csv ? ".csv" : ".json");
  return p;
}

Range require(const std::optional<Range>& r, const char* what) {
  if (!r) fail(std::string("missing required range --") + what + " (lo:hi:n)");
  return *r;
}

std::filesystem::path require_output(const RunConfig& cfg) {
  if (cfg.output.empty()) fail("missing --output path");
  return cfg.output;
}

std::vector<double> to_grid(const Range& r) {
  return linspace(r.lo, r.hi, r.n);
}

void write_gnuplot_stub(const std::filesystem::path& data,
                        std::size_t n_columns) {
  std::filesystem::path gp = data;
  gp.replace_extension(".gp");
  std::ofstream os(gp);
  os << "# gnuplot stub for " << data.filename().string() << "\n";
  os << "set datafile separator ','\n";
  os << "plot ";
  for (std::size_t c = 2; c <= n_columns; ++c) {
    if (c > 2) os << ", \\\n     ";
    os << "'" << data.filename().string() << "' using 1:" << c
       << " with lines title 'col" << c << "'";
  }
  os << "\n";
}

void maybe_gnuplot(const RunConfig& cfg, const std::filesystem::path& file,
                   std::size_t n_columns) {
  if (cfg.gnuplot) write_gnuplot_stub(file, n_columns);
}

void write_metadata(const std::filesystem::path& path, const std::string& command,
                    const RunConfig& cfg, const json& parameters,
                    const std::vector<std::filesystem::path>& files) {
  json j;
  j["tool"] = "breitrabi";
  j["version"] = kVersion;
  j["command"] = command;
  j["atom"] = {{"name", cfg.atom.name},
               {"I", to_string(cfg.atom.nuclear_spin)},
               {"a_prime", cfg.atom.a_prime},
               {"b_prime", cfg.atom.b_prime}};
  j["parameters"] = parameters;
  json names = json::array();
  for (const auto& f : files) names.push_back(f.filename().string());
  j["files"] = names;
  std::ofstream os(path);
  if (!os) fail("cannot open metadata file " + path.string());
  os << j.dump(2) << "\n";
}

Table levels_table(const AtomParams& atom, const Range& B, double f) {
  const SpectrumTable sweep = spectrum_sweep(atom, B.lo, B.hi, B.n, f);
  Table t;
  t.comments = {tool_comment("levels"), atom_comment(atom),
                "f: " + format_double(f), "units: B in tesla, energies in E/A"};
  t.columns.push_back("B");
  for (const auto& id : sweep.ids) t.columns.push_back("E[" + to_string(id) + "]");
  for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
    std::vector<double> row{sweep.grid[i]};
    row.insert(row.end(), sweep.energies[i].begin(), sweep.energies[i].end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table entropy_table(const AtomParams& atom, const Range& B, double f) {
  const auto basis = product_basis(atom.nuclear_spin);
  const auto grid = linspace(B.lo, B.hi, B.n);
  Table t;
  t.comments = {tool_comment("entropy"), atom_comment(atom),
                "f: " + format_double(f),
                "units: B in tesla, entropies in bits"};
  std::vector<LevelId> ids;
  for (const auto& l : labeled_levels(atom, {grid[0], f})) ids.push_back(l.id);
  t.columns.push_back("B");
  for (const auto& id : ids) t.columns.push_back("S[" + to_string(id) + "]");
  for (double b : grid) {
    std::vector<double> row{b};
    const auto levels = labeled_levels(atom, {b, f});
    for (const auto& id : ids) {
      for (const auto& l : levels)
        if (l.id == id) row.push_back(state_entropy(l.amplitudes, basis));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table berry_table(const AtomParams& atom, const LevelId& id, const Range& B,
                  const Range& theta, double f, bool numeric, int steps) {
  const auto B_grid = to_grid(B);
  const auto theta_grid = to_grid(theta);
  const MarginalScan scan = marginal_phase_scan(atom, id, B_grid, theta_grid, f);

  Table t;
  t.comments = {tool_comment("berry"), atom_comment(atom),
                "level: " + to_string(id), "f: " + format_double(f),
                "units: theta in radians, B in tesla, phases in radians"};
  t.columns = {"theta", "B", "gamma_e", "gamma_n"};
  if (numeric) {
    t.comments.push_back("numeric cross-check: Wilson loops with " +
                         std::to_string(steps) + " steps");
    t.columns.insert(t.columns.end(),
                     {"gamma_e_numeric", "gamma_n_numeric", "dev_e", "dev_n"});
  }
  for (std::size_t ti = 0; ti < theta_grid.size(); ++ti) {
    for (std::size_t bi = 0; bi < B_grid.size(); ++bi) {
      const std::size_t c = scan.cell(ti, bi);
      std::vector<double> row{theta_grid[ti], B_grid[bi],
                              scan.gamma_electron[c], scan.gamma_nuclear[c]};
      if (numeric) {
        const NumericMarginal nm = marginal_phase_numeric(
            atom, {theta_grid[ti], B_grid[bi], f, steps}, id);
        row.push_back(nm.electron);
        row.push_back(nm.nuclear);
        row.push_back(std::abs(wrap_angle(nm.electron - scan.gamma_electron[c])));
        row.push_back(std::abs(wrap_angle(nm.nuclear - scan.gamma_nuclear[c])));
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

double branch_code(Branch b) {
  switch (b) {
    case Branch::single: return 0;
    case Branch::minus: return 1;
    case Branch::plus: return 2;
  }
  return 3;
}

}  // namespace

std::vector<std::filesystem::path> run_levels(const RunConfig& cfg) {
  warn_if_f_out_of_bounds(cfg.f);
  const Range B = require(cfg.B_range, "B");
  const Table t = levels_table(cfg.atom, B, cfg.f);
  const auto path = with_extension(require_output(cfg), cfg.format);
  write_table(t, path, cfg.format);
  maybe_gnuplot(cfg, path, t.columns.size());
  return {path};
}

std::vector<std::filesystem::path> run_entropy(const RunConfig& cfg) {
  warn_if_f_out_of_bounds(cfg.f);
  const Range B = require(cfg.B_range, "B");
  const Table t = entropy_table(cfg.atom, B, cfg.f);
  const auto path = with_extension(require_output(cfg), cfg.format);
  write_table(t, path, cfg.format);
  maybe_gnuplot(cfg, path, t.columns.size());
  return {path};
}

std::vector<std::filesystem::path> run_phase_diagram(const RunConfig& cfg) {
  const Range B = require(cfg.B_range, "B");
  const Range f = require(cfg.f_range, "f-range");
  const auto f_grid = to_grid(f);
  const auto B_grid = to_grid(B);
  const PhaseDiagram pd = phase_diagram(cfg.atom, f_grid, B_grid);

  const std::filesystem::path stem = require_output(cfg);
  auto named = [&](const char* suffix) {
    std::filesystem::path p = stem;
    p += suffix;
    return with_extension(p, cfg.format);
  };

  auto grid_table = [&](const char* what, const char* column,
                        auto value_of) {
    Table t;
    t.comments = {tool_comment("phase-diagram"), atom_comment(cfg.atom),
                  std::string("quantity: ") + what};
    t.columns = {"f", "B", column};
    for (std::size_t fi = 0; fi < f_grid.size(); ++fi)
      for (std::size_t bi = 0; bi < B_grid.size(); ++bi)
        t.rows.push_back(
            {f_grid[fi], B_grid[bi], value_of(pd.cell(fi, bi))});
    return t;
  };

  const Table gap = grid_table("ground-state gap Delta/A", "gap",
                               [&](std::size_t c) { return pd.gap[c]; });
  const Table entropy =
      grid_table("ground-state entanglement entropy (bits)", "S",
                 [&](std::size_t c) { return pd.entropy[c]; });
  // beta/Omega of the ground state equals -m (+0.0 keeps m=0 cells at "0")
  const Table berry =
      grid_table("ground-state Berry phase over solid angle", "beta_over_omega",
                 [&](std::size_t c) { return -0.5 * pd.ground_m_twice[c] + 0.0; });

  const std::vector<std::filesystem::path> paths = {
      named("_gap"), named("_entropy"), named("_berry")};
  write_table(gap, paths[0], cfg.format);
  write_table(entropy, paths[1], cfg.format);
  write_table(berry, paths[2], cfg.format);
  return paths;
}

std::vector<std::filesystem::path> run_berry(const RunConfig& cfg) {
  warn_if_f_out_of_bounds(cfg.f);
  if (!cfg.level) fail("berry needs --level (e.g. m=0,- or m=+1,-)");
  const Range B = require(cfg.B_range, "B");
  const Range theta = cfg.theta_range ? *cfg.theta_range : Range{0.0, kPi, 181};
  const Table t = berry_table(cfg.atom, *cfg.level, B, theta, cfg.f,
                              cfg.numeric, cfg.steps);
  const auto path = with_extension(require_output(cfg), cfg.format);
  write_table(t, path, cfg.format);
  return {path};
}

std::vector<std::filesystem::path> run_crossings(const RunConfig& cfg) {
  warn_if_f_out_of_bounds(cfg.f);
  // sweep B when a B range is given, otherwise sweep f at fixed B
  SweepParameter axis;
  Range window{};
  double fixed = 0.0;
  if (cfg.B_range) {
    axis = SweepParameter::field;
    window = *cfg.B_range;
    fixed = cfg.f;
  } else if (cfg.f_range) {
    axis = SweepParameter::scale;
    window = *cfg.f_range;
    fixed = cfg.B;
  } else {
    fail("crossings needs --B (sweep field) or --f-range (sweep scale)");
  }
  const SweepWindow sweep{window.lo, window.hi, window.n, fixed};

  // all different-m identity pairs, then every 2-dimensional block
  std::vector<LevelId> ids;
  for (const auto& l : labeled_levels(cfg.atom, {window.lo, cfg.f}))
    ids.push_back(l.id);

  std::vector<CrossingEvent> events;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[i].m == ids[j].m) continue;
      const auto found =
          find_real_crossings(cfg.atom, axis, sweep, ids[i], ids[j]);
      events.insert(events.end(), found.begin(), found.end());
    }
  for (const auto& block : product_basis(cfg.atom.nuclear_spin).blocks) {
    if (block.dim != 2) continue;
    const auto found = find_avoided_crossings(cfg.atom, axis, sweep, block.m);
    events.insert(events.end(), found.begin(), found.end());
  }

  Table t;
  t.comments = {tool_comment("crossings"), atom_comment(cfg.atom),
                axis == SweepParameter::field
                    ? "sweep: B in [" + format_double(window.lo) + ", " +
                          format_double(window.hi) + "], f=" + format_double(fixed)
                    : "sweep: f in [" + format_double(window.lo) + ", " +
                          format_double(window.hi) + "], B=" + format_double(fixed),
                "kind: 0=real, 1=avoided; branch: 0=single, 1=minus, 2=plus",
                "location in tesla for B sweeps, dimensionless for f sweeps"};
  t.columns = {"kind",     "location", "gap",      "m2_a",
               "branch_a", "m2_b",     "branch_b"};
  for (const auto& e : events) {
    t.rows.push_back({e.kind == CrossingEvent::Kind::real ? 0.0 : 1.0,
                      e.location, e.gap_at_event,
                      static_cast<double>(e.level_a.m.twice()),
                      branch_code(e.level_a.branch),
                      static_cast<double>(e.level_b.m.twice()),
                      branch_code(e.level_b.branch)});
  }
  const auto path = with_extension(require_output(cfg), cfg.format);
  write_table(t, path, cfg.format);
  return {path};
}

std::vector<std::filesystem::path> run_figure(int number, const RunConfig& cfg) {
  std::filesystem::path dir = cfg.output.empty() ? "." : cfg.output;
  if (const char* env = std::getenv("BREITRABI_OUTDIR");
      env && cfg.output.empty())
    dir = env;
  std::filesystem::create_directories(dir);
  const std::string ext = cfg.format == OutputFormat::csv ? ".csv" : ".json";

  std::vector<std::filesystem::path> files;
  json params;
  RunConfig local = cfg;

  switch (number) {
    case 1: {
      local.atom = *find_preset("hydrogen");
      const Range B{-0.5, 0.5, 1001};
      const auto a = dir / ("fig1a_levels" + ext);
      const auto b = dir / ("fig1b_levels" + ext);
      const auto c = dir / ("fig1c_entropy" + ext);
      write_table(levels_table(local.atom, B, 1.0), a, cfg.format);
      write_table(levels_table(local.atom, B, -0.5), b, cfg.format);
      write_table(entropy_table(local.atom, B, 1.0), c, cfg.format);
      files = {a, b, c};
      params = {{"B", "-0.5:0.5:1001"}, {"f_panel_a", 1.0},
                {"f_panel_b", -0.5}, {"f_panel_c", 1.0}};
      break;
    }
    case 2: {
      local.atom = *find_preset(cfg.caption_params ? "pedagogical-caption"
                                                   : "pedagogical");
      local.f_range = Range{-1.0, 1.0, 201};
      local.B_range = Range{-1.0, 1.0, 201};
      local.output = dir / "fig2";
      files = run_phase_diagram(local);
      params = {{"f", "-1:1:201"},
                {"B", "-1:1:201"},
                {"parameter_set",
                 cfg.caption_params ? "caption (a'=0.01, b'=-0.1)"
                                    : "text (a'=0.1, b'=-0.01)"}};
      break;
    }
    case 3: {
      local.atom = *find_preset("hydrogen");
      const LevelId id{HalfInteger::from_int(0), Branch::minus};
      const auto path = dir / ("fig3_marginal_electron" + ext);
      write_table(berry_table(local.atom, id, Range{-0.5, 0.5, 201},
                              Range{0.0, kPi, 181}, 1.0, cfg.numeric, cfg.steps),
                  path, cfg.format);
      files = {path};
      params = {{"level", "m=0,-"}, {"B", "-0.5:0.5:201"},
                {"theta", "0:pi:181"}, {"f", 1.0}};
      break;
    }
    case 4: {
      local.atom = *find_preset("sodium");
      const Range B{-0.2, 0.2, 1001};
      const auto a = dir / ("fig4a_levels" + ext);
      const auto b = dir / ("fig4b_entropy" + ext);
      write_table(levels_table(local.atom, B, 1.0), a, cfg.format);
      write_table(entropy_table(local.atom, B, 1.0), b, cfg.format);
      files = {a, b};
      params = {{"B", "-0.2:0.2:1001"}, {"f", 1.0}};
      break;
    }
    case 5: {
      local.atom = *find_preset("sodium");
      const LevelId id{HalfInteger::from_int(1), Branch::minus};
      const auto path = dir / ("fig5_marginal_nuclear" + ext);
      write_table(berry_table(local.atom, id, Range{-0.2, 0.2, 201},
                              Range{0.0, kPi, 181}, 1.0, cfg.numeric, cfg.steps),
                  path, cfg.format);
      files = {path};
      params = {{"level", "m=+1,-"}, {"B", "-0.2:0.2:201"},
                {"theta", "0:pi:181"}, {"f", 1.0}};
      break;
    }
    default:
      fail("figure number must be 1..5");
  }

  write_metadata(dir / ("fig" + std::to_string(number) + ".meta.json"),
                 "figure " + std::to_string(number), local, params, files);
  return files;
}

}  // namespace breitrabi::cli
