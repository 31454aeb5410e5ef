#pragma once

#include <cstddef>
#include <vector>

#include "lambdamap/term.hpp"

namespace lambdamap {

// One node of a linear typing derivation. The context of each node is the
// ambient variable order restricted to the node's free variables.
struct Derivation {
  enum class Rule { variable, application, abstraction };

  Rule rule;
  Context context;
  Term term;
  std::vector<Derivation> premises;
  // Application only: adjacent swaps turning the concatenation of the premise
  // contexts into this node's context.
  std::size_t exchanges = 0;
};

// Succeeds iff context |- term is derivable; otherwise throws LinearityError.
Derivation check_linear(const Context& context, const Term& term);

CanonicalTerm alpha_canonical(const LinearTerm& t);

// Inverse of alpha_canonical up to naming: context x1..xk, then binders
// x(k+1), ... in preorder.
LinearTerm from_canonical(const CanonicalTerm& c);

bool alpha_equivalent(const LinearTerm& a, const LinearTerm& b);

// All subterms in preorder, the term itself first, each with its induced
// context.
std::vector<LinearTerm> subterms(const LinearTerm& t);

// True iff some proper subterm is closed.
bool is_decomposable(const LinearTerm& t);

// \x1. ... \xk. t for context (x1, ..., xk).
LinearTerm lambda_lift(const LinearTerm& t);

struct TermSize {
  std::size_t applications = 0;
  std::size_t abstractions = 0;

  std::size_t total() const noexcept { return applications + abstractions; }
  friend bool operator==(const TermSize&, const TermSize&) = default;
};

TermSize term_size(const Term& t);
TermSize term_size(const LinearTerm& t);

}  // namespace lambdamap
