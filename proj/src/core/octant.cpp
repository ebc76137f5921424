#include "qline/core/octant.hpp"

#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qline::core {

double Octant::radians() const { return k_ * (std::numbers::pi / 4.0); }

namespace {
constexpr std::array<std::string_view, 8> kNames = {"0",  "pi/4",  "pi/2",  "3pi/4",
                                                    "pi", "5pi/4", "3pi/2", "7pi/4"};
}

std::string to_string(Octant a) { return std::string(kNames[static_cast<std::size_t>(a.value())]); }

Octant parse_octant(std::string_view text) {
  for (int k = 0; k < 8; ++k) {
    if (kNames[static_cast<std::size_t>(k)] == text) return Octant(k);
  }
  throw std::invalid_argument("not an octant angle: '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, Octant a) { return os << to_string(a); }

}  // namespace qline::core
