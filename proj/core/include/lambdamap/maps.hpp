#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lambdamap/permutation.hpp"

namespace lambdamap {

// External dart id as it appears in map files.
using DartLabel = std::uint64_t;

// A transitive <v, e>-set on which e acts as a fixed-point-free involution.
// Vertices are the cycles of v, edges the cycles of e. An optional root dart
// makes it a classical rooted map.
class ClassicalMap {
 public:
  // Throws MalformedMap when the permutation pair is not a map.
  ClassicalMap(std::vector<DartLabel> darts, Permutation v, Permutation e,
               std::optional<Dart> root = std::nullopt);

  const std::vector<DartLabel>& darts() const noexcept { return darts_; }
  std::size_t size() const noexcept { return darts_.size(); }
  const Permutation& v() const noexcept { return v_; }
  const Permutation& e() const noexcept { return e_; }
  std::optional<Dart> root() const noexcept { return root_; }

  // v of order three without fixed points.
  bool is_trivalent() const;

 private:
  std::vector<DartLabel> darts_;
  Permutation v_;
  Permutation e_;
  std::optional<Dart> root_;
};

// Rooted trivalent map with boundary: v^3 = e^2 = 1, the only fixed point of
// v is the root, and the fixed points of e are exactly the boundary darts,
// kept in a fixed order. The trivial map has a single dart that is both root
// and the unique boundary dart.
class RootedTrivalentMap {
 public:
  // Throws MalformedMap when any invariant fails.
  RootedTrivalentMap(std::vector<DartLabel> darts, Permutation v, Permutation e, Dart root,
                     std::vector<Dart> boundary);

  static RootedTrivalentMap trivial();

  const std::vector<DartLabel>& darts() const noexcept { return darts_; }
  std::size_t size() const noexcept { return darts_.size(); }
  const Permutation& v() const noexcept { return v_; }
  const Permutation& e() const noexcept { return e_; }
  Dart root() const noexcept { return root_; }
  const std::vector<Dart>& boundary() const noexcept { return boundary_; }

  std::size_t degree() const noexcept { return boundary_.size(); }
  bool is_closed() const noexcept { return boundary_.empty(); }
  std::size_t trivalent_vertex_count() const noexcept { return (darts_.size() - 1) / 3; }

 private:
  std::vector<DartLabel> darts_;
  Permutation v_;
  Permutation e_;
  Dart root_;
  std::vector<Dart> boundary_;
};

// f = v^-1 ∘ e; its cycles are the faces.
Permutation face_permutation(const ClassicalMap& m);
Permutation face_permutation(const RootedTrivalentMap& m);

struct CycleCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};

CycleCounts cycle_counts(const ClassicalMap& m);

// Cycle counts after pairing every boundary dart with a fresh v-fixed dart.
// Fixed points count as 1-cycles.
CycleCounts completed_cycle_counts(const RootedTrivalentMap& m);

// Genus from c(v) - c(e) + c(f) = 2 - 2g. Throws MalformedMap if the Euler
// characteristic does not give a non-negative integer genus.
unsigned genus(const ClassicalMap& m);
unsigned genus(const RootedTrivalentMap& m);

// Relabeling of a rooted map by breadth-first search from the root, visiting
// v(d) before e(d). Two rooted maps are isomorphic iff their canonical forms
// are equal.
struct CanonicalMap {
  std::vector<Dart> v;
  std::vector<Dart> e;
  std::vector<Dart> boundary;  // root is always dart 0

  friend bool operator==(const CanonicalMap&, const CanonicalMap&) = default;
  friend auto operator<=>(const CanonicalMap&, const CanonicalMap&) = default;
};

CanonicalMap canonical_form(const RootedTrivalentMap& m);
// Requires a rooted classical map; throws InvalidArgument otherwise.
CanonicalMap canonical_form(const ClassicalMap& m);

// Rebuilds a map from its canonical form, with dart labels 0..n-1.
RootedTrivalentMap from_canonical(const CanonicalMap& c);

bool rooted_isomorphic(const RootedTrivalentMap& a, const RootedTrivalentMap& b);
bool rooted_isomorphic(const ClassicalMap& a, const ClassicalMap& b);

// Same map with darts relabeled through `labels` (labels[i] is the new id of
// dart i; need not be sorted). Used to test label independence.
RootedTrivalentMap relabel(const RootedTrivalentMap& m, const std::vector<DartLabel>& labels);

// Deletes the root dart together with its adjacent trivalent vertex and joins
// the two dangling edges into one. The returned classical map is rooted at
// the dart that was e-paired with v(e(root)).
//
// Requires a closed map. Throws VertexlessMap when the result would have no
// vertex (the trivial map, and the map of the identity term).
ClassicalMap smooth_root(const RootedTrivalentMap& m);

}  // namespace lambdamap
