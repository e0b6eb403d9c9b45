#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbx {

/// Half-integer quantum number stored as twice its value, so j = 3/2 is
/// `HalfInt{3}`. All range and parity checks are integer comparisons.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt from_int(int v) { return HalfInt{2 * v}; }

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt{-twice}; }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

/// Hilbert-space dimension 2j+1.
constexpr std::size_t dimension(HalfInt j) { return static_cast<std::size_t>(j.twice) + 1; }

constexpr bool is_valid_spin(HalfInt j) { return j.twice >= 0; }

constexpr bool is_valid_projection(HalfInt j, HalfInt m) {
  return j.twice >= 0 && ((j.twice - m.twice) % 2 == 0) && m.twice >= -j.twice &&
         m.twice <= j.twice;
}

/// Basis index of m in the ascending-m Dicke ordering (k = m + j).
inline std::size_t basis_index(HalfInt j, HalfInt m) {
  if (!is_valid_projection(j, m))
    throw std::domain_error("invalid projection m=" + m.str() + " for j=" + j.str());
  return static_cast<std::size_t>((m.twice + j.twice) / 2);
}

constexpr HalfInt projection_at(HalfInt j, std::size_t k) {
  return HalfInt{static_cast<int>(2 * k) - j.twice};
}

inline void require_spin(HalfInt j) {
  if (!is_valid_spin(j)) throw std::domain_error("negative spin j=" + j.str());
}

}  // namespace nbx
