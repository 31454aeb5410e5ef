#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lambdamap {

// Element of the Klein four group {1, R, G, B}. Encoded as a 2-bit vector so
// that multiplication is xor: R = 01, G = 10, B = 11.
enum class Klein : std::uint8_t { one = 0, R = 1, G = 2, B = 3 };

inline constexpr std::array<Klein, 4> klein_elements{Klein::one, Klein::R, Klein::G, Klein::B};
inline constexpr std::array<Klein, 3> klein_colors{Klein::R, Klein::G, Klein::B};

constexpr Klein klein_mul(Klein a, Klein b) noexcept {
  return static_cast<Klein>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

// x -o y = y x^-1 = x y.
constexpr Klein klein_imp(Klein x, Klein y) noexcept { return klein_mul(x, y); }

std::string_view to_string(Klein k) noexcept;  // "1", "R", "G", "B"
std::optional<Klein> parse_klein(std::string_view s) noexcept;

}  // namespace lambdamap
