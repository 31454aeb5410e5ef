#pragma once

#include <string>

#include "lambdamap/maps.hpp"
#include "lambdamap/term.hpp"

namespace lambdamap {

// Cyclic port order shared by both directions of the correspondence. The
// vertex permutation lists the darts of a node counterclockwise:
//   application: continuation -> argument -> function
//   abstraction: root -> parameter -> body
// so from the dart facing the root, v gives the argument (resp. parameter)
// port and v^2 the function (resp. body) port.
struct PortConvention {
  static constexpr unsigned continuation = 0;
  static constexpr unsigned argument = 1;
  static constexpr unsigned function = 2;

  static constexpr unsigned root = 0;
  static constexpr unsigned parameter = 1;
  static constexpr unsigned body = 2;
};

// Underlying rooted trivalent map of a linear term: one trivalent vertex per
// application and abstraction, a univalent root vertex on the outgoing wire,
// and one e-fixed boundary dart per free variable in context order.
// Darts are labeled 0..n-1, the root being 0.
RootedTrivalentMap term_to_map(const LinearTerm& t);

// The unique linear term whose underlying map is `m`, recovered by repeatedly
// removing the vertex next to the root. Free variables are named x1..xk in
// boundary order, binders continue the numbering in decomposition order.
LinearTerm map_to_term(const RootedTrivalentMap& m);

// map_to_term(term_to_map(t)) is alpha-equivalent to t, and
// term_to_map(map_to_term(m)) is rooted-isomorphic to m = term_to_map(t).
bool roundtrip_check(const LinearTerm& t);

// Graphviz text: one node per vertex (v-orbit), the root vertex drawn as a
// box, boundary darts as labeled leaves.
std::string to_dot(const RootedTrivalentMap& m);
std::string to_dot(const ClassicalMap& m);

}  // namespace lambdamap
