#include "breitrabi/atom.hpp"

#include <sstream>
#include <stdexcept>

namespace breitrabi {

void validate(const AtomParams& atom) {
  if (atom.nuclear_spin.twice() < 1)
    throw std::invalid_argument("nuclear spin I must be >= 1/2, got " +
                                to_string(atom.nuclear_spin));
  if (atom.a_prime == atom.b_prime)
    throw std::invalid_argument(
        "a_prime and b_prime must differ (degenerate couplings make the "
        "m=0 mixing angle undefined)");
}

std::optional<std::string> field_point_warning(const FieldPoint& point,
                                               double f_lo, double f_hi) {
  if (point.f < f_lo || point.f > f_hi) {
    std::ostringstream msg;
    msg << "hyperfine scale f=" << point.f << " outside [" << f_lo << ", "
        << f_hi << "]";
    return msg.str();
  }
  return std::nullopt;
}

const std::vector<AtomParams>& atom_presets() {
  static const std::vector<AtomParams> presets = {
      {"hydrogen", kSpinHalf, 19.767, -0.03},
      {"sodium", HalfInteger::from_twice(3), 32.091, -0.012709},
      // small-coupling parameter sets that make the (f, B) ground-state
      // phase diagram visible at order-one scales
      {"pedagogical", kSpinHalf, 0.1, -0.01},
      {"pedagogical-caption", kSpinHalf, 0.01, -0.1},
  };
  return presets;
}

const AtomParams* find_preset(const std::string& name) {
  for (const auto& atom : atom_presets())
    if (atom.name == name) return &atom;
  return nullptr;
}

}  // namespace breitrabi
