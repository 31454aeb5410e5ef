#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lambdamap/klein.hpp"
#include "lambdamap/term.hpp"

namespace lambdamap {

// Purely implicative type: a type variable or X -o Y.
class LinType {
 public:
  static LinType variable(std::size_t id);
  static LinType imp(LinType domain, LinType codomain);

  bool is_variable() const noexcept { return node_->domain == nullptr; }
  std::size_t id() const noexcept { return node_->id; }
  const LinType& domain() const noexcept { return *node_->domain; }
  const LinType& codomain() const noexcept { return *node_->codomain; }

  friend bool operator==(const LinType& a, const LinType& b);

 private:
  struct Node {
    std::size_t id = 0;
    std::unique_ptr<LinType> domain;
    std::unique_ptr<LinType> codomain;
  };
  explicit LinType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Variables print as a, b, c, ..., z, a1, b1, ...; "-o" is right-associative.
std::string to_string(const LinType& t);
// Same, with Greek letters and the lollipop sign.
std::string to_unicode_string(const LinType& t);

// Wires of a term are its subterm occurrences, indexed in preorder (0 is the
// whole term). Paths spell the route from the root: 'f' function, 'a'
// argument, 'b' body; the root wire is "root".
std::vector<std::string> wire_paths(const Term& t);

struct PrincipalTyping {
  std::vector<LinType> context_types;
  LinType result;
  std::vector<LinType> wire_types;  // preorder
};

// Most general typing by first-order unification. Type variables are renamed
// 0, 1, 2, ... in order of first occurrence reading the context types left to
// right and then the result type. Throws InternalError if unification fails.
PrincipalTyping infer_principal_type(const LinearTerm& t);

// Interpret implication as Klein multiplication under `assignment`
// (type variable id -> element). Unassigned variables map to 1.
Klein instantiate(const LinType& type, const std::map<std::size_t, Klein>& assignment);

// Klein value of every wire, preorder.
using WireColoring = std::vector<Klein>;

// The coloring induced by choosing a type for each context variable and each
// binder parameter (context first, then binders in preorder); every other wire
// follows from the typing rules.
WireColoring propagate_klein(const LinearTerm& t, const std::vector<Klein>& choices);

// Checks the typing rule at every node.
bool is_valid_three_typing(const LinearTerm& t, const WireColoring& c);
// Valid and no proper subterm (wire other than the root) has type 1.
bool is_proper_three_typing(const LinearTerm& t, const WireColoring& c);

// All 3-typings of a closed term, by enumeration over the binder parameters.
// With proper_only, parameters range over {R, G, B} and colorings with a unit
// proper-subterm wire are dropped. Throws InvalidArgument on open terms.
std::vector<WireColoring> three_typings(const LinearTerm& t, bool proper_only);

bool has_proper_three_typing(const LinearTerm& t);

}  // namespace lambdamap
