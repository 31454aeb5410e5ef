#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lambdamap {

// Position of a dart inside its map, in [0, size). External dart ids live in
// the map's label table.
using Dart = std::uint32_t;

// Bijection of {0, ..., n-1} stored as a dense image array.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidArgument unless `image` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Dart> image);

  static Permutation identity(std::size_t n);

  // Builds a permutation of {0..n-1} from disjoint cycles; darts missing from
  // every cycle are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Dart>>& cycles);

  std::size_t size() const noexcept { return image_.size(); }
  Dart operator()(Dart d) const { return image_[d]; }
  std::span<const Dart> image() const noexcept { return image_; }

  Permutation inverse() const;

  // Cycles in order of their smallest element, each starting there.
  // Fixed points appear as singleton cycles.
  std::vector<std::vector<Dart>> cycles() const;
  std::size_t cycle_count() const;
  std::vector<Dart> fixed_points() const;

  bool is_identity() const;
  // True when applying the permutation `k` times gives the identity.
  bool has_order_dividing(unsigned k) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Dart> image_;
};

// outer ∘ inner, i.e. apply `inner` first.
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace lambdamap
