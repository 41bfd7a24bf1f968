#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace breitrabi {

/// Exact half-integer quantum number, stored as twice its value.
///
/// Spin magnitudes and projections (S, I, m_S, m_I, m) are all half-integers;
/// keeping them as integers avoids rounding in basis ordering and block
/// bookkeeping. Conversion to double happens only inside matrix entries.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice_value) {
    return HalfInteger(twice_value);
  }
  static constexpr HalfInteger from_int(int n) { return HalfInteger(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice_value) : twice_(twice_value) {}
  int twice_ = 0;
};

inline constexpr HalfInteger kSpinHalf = HalfInteger::from_twice(1);

/// True when m is a valid projection of a magnitude j: |m| <= j and j - m is
/// a whole number.
constexpr bool is_valid_projection(HalfInteger j, HalfInteger m) {
  if (j.twice() < 0) return false;
  if (m.twice() < -j.twice() || m.twice() > j.twice()) return false;
  return (j - m).twice() % 2 == 0;
}

/// Projections j, j-1, ..., -j in decreasing order.
inline std::vector<HalfInteger> projections(HalfInteger j) {
  if (j.twice() < 0) throw std::invalid_argument("spin magnitude must be >= 0");
  std::vector<HalfInteger> out;
  out.reserve(static_cast<std::size_t>(j.twice()) + 1);
  for (int t = j.twice(); t >= -j.twice(); t -= 2)
    out.push_back(HalfInteger::from_twice(t));
  return out;
}

/// "3/2", "-1/2", "0", "2", ... exact rendering.
inline std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

}  // namespace breitrabi
