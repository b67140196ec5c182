#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

namespace spinstat {

// A spin quantum number or projection held as twice its value, so 1/2 is
// stored as 1 and basis indexing stays exact.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  // Accepts "1/2", "-3/2", "1", "0.5", "-1.5". Throws std::invalid_argument
  // for anything that is not an integer multiple of 1/2.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  // Number of basis states 2s+1 when this value is used as a total spin.
  constexpr int multiplicity() const { return twice_ + 1; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const;

private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// (-1)^{2s}: +1 for integer spin, -1 for half-odd-integer spin.
constexpr int statistics_sign(HalfInt s) { return s.is_integer() ? +1 : -1; }

// True when m is an admissible projection of spin s: |m| <= s, s-m integral.
constexpr bool valid_projection(HalfInt s, HalfInt m) {
  return s.twice() >= 0 && std::abs(m.twice()) <= s.twice() && (s.twice() - m.twice()) % 2 == 0;
}

// Index of projection m in the ascending basis m = -s, ..., +s.
constexpr int basis_index(HalfInt s, HalfInt m) { return (m.twice() + s.twice()) / 2; }

// Projection at basis index i of spin s.
constexpr HalfInt projection_at(HalfInt s, int index) { return HalfInt::from_twice(2 * index - s.twice()); }

} // namespace spinstat
