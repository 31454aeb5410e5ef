#include <doctest.h>

#include "lambdamap/bijection.hpp"
#include "lambdamap/coloring.hpp"
#include "lambdamap/enumeration.hpp"
#include "lambdamap/errors.hpp"
#include "lambdamap/graph.hpp"
#include "lambdamap/parser.hpp"
#include "lambdamap/term_ops.hpp"
#include "lambdamap/typing.hpp"
#include "oracles.hpp"

using namespace lambdamap;

namespace {

bool proper_at_every_vertex(const ClassicalMap& m, const EdgeColoring& c) {
  const UndirectedGraph g = underlying_graph(m);
  std::vector<unsigned> mask(g.vertex_count, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const unsigned bit = 1u << static_cast<unsigned>(c[i]);
    if (c[i] == Klein::one || (mask[g.edges[i].u] & bit) || (mask[g.edges[i].w] & bit)) return false;
    mask[g.edges[i].u] |= bit;
    mask[g.edges[i].w] |= bit;
  }
  return true;
}

ClassicalMap theta() {
  return ClassicalMap({0, 1, 2, 3, 4, 5}, Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}}),
                      Permutation::from_cycles(6, {{0, 3}, {1, 5}, {2, 4}}), Dart{0});
}

}  // namespace

TEST_CASE("theta graph has six edge 3-colorings") {
  const auto all = edge_three_colorings(theta());
  CHECK(all.size() == 6);
  for (const auto& c : all) CHECK(proper_at_every_vertex(theta(), c));
}

TEST_CASE("edge colorings agree with exhaustive assignment on smoothed term maps") {
  for (std::size_t n = 3; n <= 7; n += 2) {
    for (const auto& code : enumerate_terms(n, 0)) {
      const ClassicalMap m = smooth_root(term_to_map(from_canonical(code)));
      const auto all = edge_three_colorings(m);
      CHECK(all.size() == oracle::brute_edge_colorings(m));
      CHECK(count_edge_three_colorings(m) == all.size());
      for (const auto& c : all) CHECK(proper_at_every_vertex(m, c));
    }
  }
}

TEST_CASE("Petersen term: no edge coloring and no proper typing") {
  const LinearTerm t = parse_judgment("\\a.\\b.\\c.\\d.\\e.a (\\f.c (e (b (d f))))");
  const ClassicalMap m = smooth_root(term_to_map(t));
  CHECK(graph_isomorphic(underlying_graph(m), petersen_graph()));
  CHECK(count_edge_three_colorings(m) == 0);
  const CorrespondenceCounts counts = typing_coloring_counts(t);
  CHECK(counts.proper_typings == 0);
  CHECK(counts.agree());
}

TEST_CASE("typing and coloring counts agree on small closed terms") {
  for (std::size_t n = 3; n <= 5; n += 2) {
    for (const auto& code : enumerate_terms(n, 0)) {
      const LinearTerm t = from_canonical(code);
      const CorrespondenceCounts counts = typing_coloring_counts(t);
      CAPTURE(to_string(t));
      CHECK(counts.agree());
      if (is_decomposable(t)) CHECK(counts.proper_typings == 0);
    }
  }
}

TEST_CASE("coloring needs a trivalent map") {
  const ClassicalMap torus({0, 1, 2, 3}, Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                           Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
  CHECK_THROWS_AS(edge_three_colorings(torus), InvalidArgument);
  CHECK_THROWS_AS(typing_coloring_counts(parse_judgment("\\x.x")), VertexlessMap);
}

TEST_CASE("four color desk check up to size 9") {
  const FourColorReport report = fourct_desk_check(9, 2);
  REQUIRE(report.rows.size() == 5);
  const std::uint64_t expected[] = {1, 1, 4, 24, 176};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(report.rows[i].size == 2 * i + 1);
    CHECK(report.rows[i].terms == expected[i]);
    CHECK(report.rows[i].passed == expected[i]);
  }
  CHECK(report.total_terms() == 206);
  CHECK(report.ok());
}
