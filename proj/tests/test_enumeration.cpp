#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lambdamap/bijection.hpp"
#include "lambdamap/enumeration.hpp"
#include "lambdamap/graph.hpp"
#include "lambdamap/series.hpp"
#include "lambdamap/term_ops.hpp"
#include "oracles.hpp"

using namespace lambdamap;

namespace {

// Unfiltered classes enumerated per (n, k) in these tests stay below this.
constexpr std::uint64_t kEnumerationBudget = 3'000'000;
// Filtered enumeration visits every unfiltered term, so it gets less room.
constexpr std::uint64_t kFilteredBudget = 300'000;

bool within(const CoefficientTable& linear, std::size_t n, std::size_t k, std::uint64_t budget) {
  return linear.at(n, k) <= budget;
}

std::set<CanonicalTerm> as_set(const std::vector<CanonicalTerm>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("enumeration matches a naive generator on small sizes") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t k = 0; k <= 3; ++k) {
      std::vector<Term> naive;
      const Context ctx = oracle::standard_context(k);
      oracle::naive_terms(n, ctx, 0, naive);
      std::set<CanonicalTerm> expected;
      for (const auto& t : naive) expected.insert(alpha_canonical(LinearTerm(ctx, t)));
      CAPTURE(n);
      CAPTURE(k);
      CHECK(expected.size() == naive.size());
      const auto got = enumerate_terms(n, k);
      CHECK(as_set(got) == expected);
    }
  }
}

TEST_CASE("counts agree with the linear series wherever enumeration is affordable") {
  const CoefficientTable linear = series_linear(9);
  std::size_t cells = 0;
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      if (!within(linear, n, k, kEnumerationBudget)) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(BigInt(count_terms(n, k)) == linear.at(n, k));
      ++cells;
    }
  }
  CHECK(cells >= 40);
}

TEST_CASE("indecomposable counts agree with their series") {
  const CoefficientTable linear = series_linear(9);
  const CoefficientTable indec = series_indecomposable(9);
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      if (!within(linear, n, k, kFilteredBudget)) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(BigInt(count_terms(n, k, TermFilter::indecomposable)) == indec.at(n, k));
    }
  }
}

TEST_CASE("planar counts (genus of the lifted map) agree with the ordinary planar series") {
  const CoefficientTable linear = series_linear(7);
  const CoefficientTable planar = series_planar(7);
  const CoefficientTable planar_indec = series_planar_indecomposable(7);
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      if (!within(linear, n, k, kFilteredBudget)) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(BigInt(count_terms(n, k, TermFilter::planar)) == planar.at(n, k));
      CHECK(BigInt(count_terms(n, k, TermFilter::planar_indecomposable)) == planar_indec.at(n, k));
    }
  }
}

TEST_CASE("emissions are sorted, distinct and linear") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto terms = enumerate_terms(n, k);
      CHECK(std::is_sorted(terms.begin(), terms.end()));
      CHECK(std::adjacent_find(terms.begin(), terms.end()) == terms.end());
      for (const auto& c : terms) {
        const LinearTerm t = from_canonical(c);
        CHECK_NOTHROW(check_linear(t.context(), t.term()));
        CHECK(term_size(t).total() == n);
        CHECK(alpha_canonical(t) == c);
      }
    }
  }
}

TEST_CASE("parity: n + k is odd for every inhabited cell") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= 3; ++k) {
      if ((n + k) % 2 == 0 || k > n + 1) CHECK(count_terms(n, k) == 0);
    }
  }
  CHECK(count_terms(0, 0) == 0);
  CHECK(count_terms(0, 1) == 1);
}

TEST_CASE("filters nest") {
  for (std::size_t n = 1; n <= 7; n += 2) {
    const auto all = as_set(enumerate_terms(n, 0));
    const auto indec = as_set(enumerate_terms(n, 0, TermFilter::indecomposable));
    const auto planar = as_set(enumerate_terms(n, 0, TermFilter::planar));
    const auto planar_indec = as_set(enumerate_terms(n, 0, TermFilter::planar_indecomposable));
    CHECK(std::includes(all.begin(), all.end(), indec.begin(), indec.end()));
    CHECK(std::includes(all.begin(), all.end(), planar.begin(), planar.end()));
    std::set<CanonicalTerm> both;
    std::set_intersection(planar.begin(), planar.end(), indec.begin(), indec.end(),
                          std::inserter(both, both.begin()));
    CHECK(both == planar_indec);
  }
}

TEST_CASE("bridgeless-map filter coincides with indecomposability") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 0; n + k <= 7 && k <= n + 1; ++k) {
      CHECK(enumerate_terms(n, k, TermFilter::bridgeless_map) == enumerate_terms(n, k, TermFilter::indecomposable));
    }
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  for (unsigned workers : {2u, 3u, 8u}) {
    CHECK(enumerate_terms(7, 0, TermFilter::all, {workers}) == enumerate_terms(7, 0));
    CHECK(enumerate_terms(6, 1, TermFilter::indecomposable, {workers}) ==
          enumerate_terms(6, 1, TermFilter::indecomposable));
    CHECK(count_terms(0, 1, TermFilter::all, {workers}) == 1);
  }
}

TEST_CASE("streaming visits every unfiltered term") {
  std::uint64_t seen = 0;
  for_each_term(7, 0, [&](const CanonicalTerm&) { ++seen; });
  CHECK(seen == 1105);
}

TEST_CASE("closed terms of size 11") { CHECK(count_terms(11, 0) == 828250); }

TEST_CASE("filter names") {
  CHECK(parse_filter("planar-indecomposable") == TermFilter::planar_indecomposable);
  CHECK(parse_filter("bridgeless-map") == TermFilter::bridgeless_map);
  CHECK_FALSE(parse_filter("nonsense").has_value());
  for (TermFilter f : {TermFilter::all, TermFilter::indecomposable, TermFilter::planar,
                       TermFilter::planar_indecomposable, TermFilter::bridgeless_map}) {
    CHECK(parse_filter(to_string(f)) == f);
  }
}

TEST_CASE("worker count from the environment") {
  ::setenv("LAMBDAMAP_WORKERS", "4", 1);
  CHECK(workers_from_environment() == 4);
  ::setenv("LAMBDAMAP_WORKERS", "0", 1);
  CHECK(workers_from_environment() == 1);
  ::setenv("LAMBDAMAP_WORKERS", "many", 1);
  CHECK(workers_from_environment() == 1);
  ::unsetenv("LAMBDAMAP_WORKERS");
  CHECK(workers_from_environment() == 1);
}
