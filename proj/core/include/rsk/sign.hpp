#pragma once

#include <cstdint>
#include <ostream>

namespace rsk {

// A sign is exactly +1 or -1. Keeping it a dedicated type (rather than an
// int) makes the +-1 invariant unforgeable.
enum class Sign : std::int8_t { minus = -1, plus = +1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }

// (-1)^count
constexpr Sign sign_of_parity(long long count) {
  return count % 2 == 0 ? Sign::plus : Sign::minus;
}

constexpr int to_int(Sign s) { return static_cast<int>(s); }

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  return os << (s == Sign::plus ? "+1" : "-1");
}

}  // namespace rsk
