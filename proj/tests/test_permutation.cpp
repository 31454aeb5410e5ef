#include <doctest.h>

#include <random>

#include "lambdamap/errors.hpp"
#include "lambdamap/permutation.hpp"

using namespace lambdamap;

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 2}), InvalidArgument);
  CHECK_NOTHROW(Permutation({1, 0}));
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), InvalidArgument);
}

TEST_CASE("cycles start at their smallest element and include fixed points") {
  const Permutation p = Permutation::from_cycles(6, {{4, 2, 5}, {1, 3}});
  const std::vector<std::vector<Dart>> expected = {{0}, {1, 3}, {2, 5, 4}};
  CHECK(p.cycles() == expected);
  CHECK(p.cycle_count() == 3);
  CHECK(p.fixed_points() == std::vector<Dart>{0});
  CHECK(p.has_order_dividing(6));
  CHECK_FALSE(p.has_order_dividing(3));
  CHECK_FALSE(p.is_identity());
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("composition applies the inner permutation first") {
  const Permutation a = Permutation::from_cycles(3, {{0, 1}});
  const Permutation b = Permutation::from_cycles(3, {{1, 2}});
  const Permutation ab = compose(a, b);
  CHECK(ab(0) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
}

TEST_CASE("inverse is a two-sided inverse on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Dart> image(1 + trial % 17);
    for (Dart i = 0; i < image.size(); ++i) image[i] = i;
    std::shuffle(image.begin(), image.end(), rng);
    const Permutation p(image);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
    std::size_t total = 0;
    for (const auto& c : p.cycles()) total += c.size();
    CHECK(total == p.size());
  }
}
