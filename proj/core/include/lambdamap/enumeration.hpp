#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lambdamap/term.hpp"

namespace lambdamap {

enum class TermFilter {
  all,
  indecomposable,
  planar,
  planar_indecomposable,
  bridgeless_map,
};

std::string_view to_string(TermFilter f) noexcept;
std::optional<TermFilter> parse_filter(std::string_view name) noexcept;

// Filter predicate on a single term. Planarity is genus 0 of the map of the
// lambda lifting; bridgeless_map tests the map of the lambda lifting.
bool passes_filter(const CanonicalTerm& t, TermFilter filter);

struct EnumerationOptions {
  unsigned workers = 1;
};

// Every alpha-class of linear terms with `size` applications+abstractions and
// `free_variables` context variables (each ordering of the context counted
// separately) passing `filter`, sorted by canonical code.
std::vector<CanonicalTerm> enumerate_terms(std::size_t size, std::size_t free_variables,
                                           TermFilter filter = TermFilter::all,
                                           EnumerationOptions options = {});

std::uint64_t count_terms(std::size_t size, std::size_t free_variables,
                          TermFilter filter = TermFilter::all, EnumerationOptions options = {});

// Streams the unfiltered terms in generation order. The callback receives a
// buffer that is only valid during the call.
void for_each_term(std::size_t size, std::size_t free_variables,
                   const std::function<void(const CanonicalTerm&)>& visit);

// Reads LAMBDAMAP_WORKERS; 1 when unset or invalid.
unsigned workers_from_environment();

}  // namespace lambdamap
