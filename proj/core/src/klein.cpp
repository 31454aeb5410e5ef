#include "lambdamap/klein.hpp"

namespace lambdamap {

std::string_view to_string(Klein k) noexcept {
  switch (k) {
    case Klein::one:
      return "1";
    case Klein::R:
      return "R";
    case Klein::G:
      return "G";
    case Klein::B:
      return "B";
  }
  return "?";
}

std::optional<Klein> parse_klein(std::string_view s) noexcept {
  for (Klein k : klein_elements) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

}  // namespace lambdamap
