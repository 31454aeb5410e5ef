#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lambdamap/klein.hpp"
#include "lambdamap/maps.hpp"
#include "lambdamap/term.hpp"

namespace lambdamap {

// Colors from {R, G, B} indexed like the edges of underlying_graph(m), i.e.
// e-orbits ordered by their smallest dart.
using EdgeColoring = std::vector<Klein>;

// All proper edge 3-colorings (three distinct colors at every vertex) of a
// classical trivalent map. Throws InvalidArgument if the map is not trivalent.
std::vector<EdgeColoring> edge_three_colorings(const ClassicalMap& m);
std::size_t count_edge_three_colorings(const ClassicalMap& m);

struct CorrespondenceCounts {
  std::size_t proper_typings = 0;
  std::size_t edge_colorings = 0;
  bool agree() const noexcept { return proper_typings == edge_colorings; }
};

// Proper 3-typings of a closed term against proper edge 3-colorings of the
// smoothed map. Throws as smooth_root for the identity term.
CorrespondenceCounts typing_coloring_counts(const LinearTerm& t);
bool typing_coloring_correspondence(const LinearTerm& t);

struct FourColorReport {
  struct Row {
    std::size_t size = 0;
    std::uint64_t terms = 0;
    std::uint64_t passed = 0;
  };
  std::vector<Row> rows;
  std::vector<CanonicalTerm> counterexamples;

  std::uint64_t total_terms() const;
  bool ok() const noexcept { return counterexamples.empty(); }
};

// Checks that every closed planar indecomposable term of size <= max_size
// has a proper 3-typing.
FourColorReport fourct_desk_check(std::size_t max_size, unsigned workers = 1);

}  // namespace lambdamap
