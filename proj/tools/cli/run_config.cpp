#include "run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace breitrabi::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

Range require_range(const std::string& text, const std::string& what) {
  const auto r = parse_range(text);
  if (!r) fail("bad " + what + " range '" + text + "', expected lo:hi:n with n >= 2");
  return *r;
}

AtomParams atom_from_json(const json& j) {
  AtomParams atom;
  if (j.is_string()) {
    const auto* preset = find_preset(j.get<std::string>());
    if (!preset) fail("unknown atom preset '" + j.get<std::string>() + "'");
    return *preset;
  }
  if (!j.is_object()) fail("atom must be a preset name or an inline object");
  atom.name = j.value("name", std::string("custom"));
  if (!j.contains("I") || !j.contains("a_prime") || !j.contains("b_prime"))
    fail("inline atom needs I, a_prime and b_prime");
  std::optional<HalfInteger> spin;
  if (j["I"].is_string())
    spin = parse_half_integer(j["I"].get<std::string>());
  else if (j["I"].is_number())
    spin = parse_half_integer(std::to_string(j["I"].get<double>()));
  if (!spin) fail("bad nuclear spin I in atom definition");
  atom.nuclear_spin = *spin;
  atom.a_prime = j["a_prime"].get<double>();
  atom.b_prime = j["b_prime"].get<double>();
  validate(atom);
  return atom;
}

}  // namespace

std::optional<Range> parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return std::nullopt;
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    Range r;
    r.lo = std::stod(text.substr(0, c1), &used);
    if (used != c1) return std::nullopt;
    const std::string mid = text.substr(c1 + 1, c2 - c1 - 1);
    r.hi = std::stod(mid, &used);
    if (used != mid.size()) return std::nullopt;
    const std::string tail = text.substr(c2 + 1);
    r.n = std::stoi(tail, &used);
    if (used != tail.size()) return std::nullopt;
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.n < 2)
      return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<HalfInteger> parse_half_integer(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      if (text.substr(slash + 1) != "2") return std::nullopt;
      return HalfInteger::from_twice(std::stoi(text.substr(0, slash)));
    }
    const double v = std::stod(text);
    const double twice = 2.0 * v;
    if (std::abs(twice - std::round(twice)) > 1e-9) return std::nullopt;
    return HalfInteger::from_twice(static_cast<int>(std::round(twice)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

RunConfig resolve_config(const RawOptions& raw) {
  json file = json::object();
  if (raw.config_file) {
    std::ifstream is(*raw.config_file);
    if (!is) fail("cannot open config file " + *raw.config_file);
    try {
      is >> file;
    } catch (const json::parse_error& e) {
      fail("config file " + *raw.config_file + ": " + e.what());
    }
    if (!file.is_object()) fail("config file must hold a JSON object");
  }

  RunConfig cfg;

  // atom: flag overrides file; flag accepts preset names only, inline atoms
  // come from the config file
  if (raw.atom) {
    const auto* preset = find_preset(*raw.atom);
    if (!preset) fail("unknown atom preset '" + *raw.atom + "'");
    cfg.atom = *preset;
  } else if (file.contains("atom")) {
    cfg.atom = atom_from_json(file["atom"]);
  } else {
    cfg.atom = *find_preset("hydrogen");
  }

  auto pick_range = [&](const std::optional<std::string>& flag,
                        const char* key) -> std::optional<Range> {
    if (flag) return require_range(*flag, key);
    if (file.contains(key)) return require_range(file[key].get<std::string>(), key);
    return std::nullopt;
  };
  cfg.B_range = pick_range(raw.B_range, "B");
  cfg.f_range = pick_range(raw.f_range, "f_range");
  cfg.theta_range = pick_range(raw.theta_range, "theta");

  cfg.f = raw.f ? *raw.f : file.value("f", 1.0);
  cfg.B = raw.B ? *raw.B : file.value("B_fixed", 0.0);

  if (raw.level) {
    cfg.level = parse_level_id(*raw.level);
    if (!cfg.level) fail("bad level id '" + *raw.level + "', expected e.g. m=0,- or m=+1");
  } else if (file.contains("level")) {
    cfg.level = parse_level_id(file["level"].get<std::string>());
    if (!cfg.level) fail("bad level id in config file");
  }

  const std::string fmt = raw.format ? *raw.format : file.value("format", "csv");
  if (fmt == "csv") cfg.format = OutputFormat::csv;
  else if (fmt == "json") cfg.format = OutputFormat::json;
  else fail("format must be csv or json, got '" + fmt + "'");

  std::string out = raw.output ? *raw.output : file.value("output", "");
  if (!out.empty()) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
      if (const char* dir = std::getenv("BREITRABI_OUTDIR"))
        p = std::filesystem::path(dir) / p;
    }
    cfg.output = p;
  }

  cfg.numeric = raw.numeric ? *raw.numeric : file.value("numeric", false);
  cfg.steps = raw.steps ? *raw.steps : file.value("steps", 1000);
  if (cfg.steps < 3) fail("--steps must be at least 3");
  cfg.gnuplot = raw.gnuplot ? *raw.gnuplot : file.value("gnuplot", false);
  cfg.caption_params =
      raw.caption_params ? *raw.caption_params : file.value("caption_params", false);
  return cfg;
}

}  // namespace breitrabi::cli
