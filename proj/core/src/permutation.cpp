#include "lambdamap/permutation.hpp"

#include <string>

#include "lambdamap/errors.hpp"

namespace lambdamap {

Permutation::Permutation(std::vector<Dart> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Dart d : image_) {
    if (d >= image_.size() || hit[d]) {
      throw InvalidArgument("not a permutation of {0.." + std::to_string(image_.size()) + ")");
    }
    hit[d] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Dart> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Dart>(i);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Dart>>& cycles) {
  std::vector<Dart> image(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Dart>(i);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Dart d = cycle[i];
      if (d >= n || seen[d]) throw InvalidArgument("cycles are not disjoint or out of range");
      seen[d] = true;
      image[d] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Dart> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Dart>(i);
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

std::vector<std::vector<Dart>> Permutation::cycles() const {
  std::vector<std::vector<Dart>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Dart> cycle;
    for (Dart d = static_cast<Dart>(start); !seen[d]; d = image_[d]) {
      seen[d] = true;
      cycle.push_back(d);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Dart d = static_cast<Dart>(start); !seen[d]; d = image_[d]) seen[d] = true;
  }
  return count;
}

std::vector<Dart> Permutation::fixed_points() const {
  std::vector<Dart> out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] == i) out.push_back(static_cast<Dart>(i));
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

bool Permutation::has_order_dividing(unsigned k) const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    Dart d = static_cast<Dart>(i);
    for (unsigned step = 0; step < k; ++step) d = image_[d];
    if (d != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<Dart> image(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) image[i] = outer(inner(static_cast<Dart>(i)));
  return Permutation(std::move(image));
}

}  // namespace lambdamap
