#pragma once

#include <optional>
#include <string>
#include <vector>

#include "breitrabi/half_integer.hpp"

namespace breitrabi {

/// Hyperfine-coupled atom with one valence electron (S = 1/2 always).
/// a_prime = γ_e ħ / A and b_prime = γ_n ħ / A in 1/tesla, so that every
/// energy in the library is dimensionless (E/A).
struct AtomParams {
  std::string name;
  HalfInteger nuclear_spin;  // I
  double a_prime = 0.0;      // 1/T
  double b_prime = 0.0;      // 1/T
};

inline constexpr HalfInteger kElectronSpin = kSpinHalf;

/// Throws std::invalid_argument unless I >= 1/2 and a_prime != b_prime.
void validate(const AtomParams& atom);

/// Field magnitude along the quantization axis plus the hyperfine scale
/// factor f multiplying the whole A I·S term.
struct FieldPoint {
  double B = 0.0;  // tesla, signed
  double f = 1.0;  // dimensionless
};

/// f outside [lo, hi] is allowed but flagged; returns the warning text.
std::optional<std::string> field_point_warning(const FieldPoint& point,
                                               double f_lo = -1.0,
                                               double f_hi = 1.0);

/// Bundled presets: hydrogen, sodium, and the two pedagogical parameter sets
/// used for the (f, B) phase-diagram plots.
const std::vector<AtomParams>& atom_presets();

/// nullptr when the name is not a preset.
const AtomParams* find_preset(const std::string& name);

}  // namespace breitrabi
