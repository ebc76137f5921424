#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qline::core {

/// An angle k*pi/4 from the set A = {0, pi/4, ..., 7pi/4}, stored as k mod 8.
///
/// Every protocol angle (client rotations, algorithm angles, blind
/// measurement angles, corrections) lives here so that the blind-angle
/// arithmetic is exact. Conversion to radians only happens when a gate
/// matrix is built.
class Octant {
public:
  constexpr Octant() = default;
  constexpr explicit Octant(int k) : k_(((k % 8) + 8) % 8) {}

  /// Multiple of pi/4 in 0..7.
  constexpr int value() const { return k_; }
  double radians() const;

  static constexpr Octant zero() { return Octant(0); }
  static constexpr Octant pi() { return Octant(4); }
  /// pi when bit is 1, zero otherwise.
  static constexpr Octant pi_times(int bit) { return Octant(4 * (bit & 1)); }

  constexpr Octant operator-() const { return Octant(-k_); }
  constexpr Octant& operator+=(Octant o) { k_ = (k_ + o.k_) % 8; return *this; }
  constexpr Octant& operator-=(Octant o) { k_ = (k_ - o.k_ + 8) % 8; return *this; }
  friend constexpr Octant operator+(Octant a, Octant b) { return a += b; }
  friend constexpr Octant operator-(Octant a, Octant b) { return a -= b; }

  /// (-1)^bit * this
  constexpr Octant signed_by(int bit) const { return (bit & 1) ? -*this : *this; }

  friend constexpr bool operator==(Octant, Octant) = default;
  friend constexpr auto operator<=>(Octant, Octant) = default;

private:
  int k_ = 0;
};

/// The eight elements of A in increasing order.
constexpr std::array<Octant, 8> all_octants() {
  return {Octant(0), Octant(1), Octant(2), Octant(3),
          Octant(4), Octant(5), Octant(6), Octant(7)};
}

/// "0", "pi/4", "pi/2", "3pi/4", ...
std::string to_string(Octant a);

/// Inverse of to_string; throws std::invalid_argument on anything else.
Octant parse_octant(std::string_view text);
std::ostream& operator<<(std::ostream& os, Octant a);

}  // namespace qline::core
