#include <doctest.h>

#include <map>
#include <random>

#include "lambdamap/enumeration.hpp"
#include "lambdamap/errors.hpp"
#include "lambdamap/klein.hpp"
#include "lambdamap/parser.hpp"
#include "lambdamap/term_ops.hpp"
#include "lambdamap/typing.hpp"
#include "oracles.hpp"

using namespace lambdamap;

namespace {

// Types equal up to a bijective renaming of variables.
bool same_up_to_renaming(const LinType& a, const LinType& b, std::map<std::size_t, std::size_t>& fwd,
                         std::map<std::size_t, std::size_t>& back) {
  if (a.is_variable() != b.is_variable()) return false;
  if (!a.is_variable()) {
    return same_up_to_renaming(a.domain(), b.domain(), fwd, back) &&
           same_up_to_renaming(a.codomain(), b.codomain(), fwd, back);
  }
  const auto [f, fresh_f] = fwd.emplace(a.id(), b.id());
  const auto [g, fresh_g] = back.emplace(b.id(), a.id());
  return f->second == b.id() && g->second == a.id();
}

LinType var(std::size_t i) { return LinType::variable(i); }
LinType imp(LinType a, LinType b) { return LinType::imp(std::move(a), std::move(b)); }

constexpr Klein one = Klein::one;
constexpr Klein R = Klein::R;
constexpr Klein G = Klein::G;
constexpr Klein B = Klein::B;

const char* const kComposition = "\\x.\\y.\\z.x (y z)";

}  // namespace

TEST_CASE("Klein four group laws") {
  for (Klein a : klein_elements) {
    CHECK(klein_mul(a, one) == a);
    CHECK(klein_mul(a, a) == one);
    CHECK(klein_imp(a, a) == one);
    CHECK(parse_klein(to_string(a)) == a);
    for (Klein b : klein_elements) {
      CHECK(klein_mul(a, b) == klein_mul(b, a));
      // x -o y is the unique z with x * z = y
      CHECK(klein_mul(a, klein_imp(a, b)) == b);
      for (Klein c : klein_elements) CHECK(klein_mul(klein_mul(a, b), c) == klein_mul(a, klein_mul(b, c)));
    }
  }
  CHECK(klein_mul(R, G) == B);
  CHECK(klein_mul(G, B) == R);
  CHECK(klein_mul(B, R) == G);
  CHECK_FALSE(parse_klein("Y").has_value());
}

TEST_CASE("principal type of composition") {
  const PrincipalTyping p = infer_principal_type(parse_judgment(kComposition));
  CHECK(to_string(p.result) == "(a -o b) -o (c -o a) -o c -o b");
  CHECK(to_unicode_string(p.result) == "(α ⊸ β) ⊸ (γ ⊸ α) ⊸ γ ⊸ β");
  // (β ⊸ γ) ⊸ ((α ⊸ β) ⊸ (α ⊸ γ)) with α, β, γ = 0, 1, 2
  const LinType textbook = imp(imp(var(1), var(2)), imp(imp(var(0), var(1)), imp(var(0), var(2))));
  std::map<std::size_t, std::size_t> fwd;
  std::map<std::size_t, std::size_t> back;
  CHECK(same_up_to_renaming(p.result, textbook, fwd, back));
}

TEST_CASE("instantiating the principal type of composition gives a proper 3-typing") {
  const LinearTerm t = parse_judgment(kComposition);
  const PrincipalTyping p = infer_principal_type(t);
  // α = R, β = B, γ = G in the renamed variables a = β, b = γ, c = α
  const std::map<std::size_t, Klein> assignment = {{0, B}, {1, G}, {2, R}};
  WireColoring c;
  for (const auto& w : p.wire_types) c.push_back(instantiate(w, assignment));
  CHECK(wire_paths(t.term()) == std::vector<std::string>{"root", "b", "bb", "bbb", "bbbf", "bbba", "bbbaf", "bbbaa"});
  CHECK(c == WireColoring{one, R, B, G, R, B, G, R});
  CHECK(is_proper_three_typing(t, c));
  CHECK(c == propagate_klein(t, {R, G, R}));
}

TEST_CASE("principal types of open terms and of the identity") {
  const PrincipalTyping app = infer_principal_type(parse_judgment("x, y |- x y"));
  CHECK(to_string(app.context_types[0]) == "a -o b");
  CHECK(to_string(app.context_types[1]) == "a");
  CHECK(to_string(app.result) == "b");
  CHECK(to_string(infer_principal_type(parse_judgment("\\x.x")).result) == "a -o a");
  CHECK(to_string(infer_principal_type(parse_judgment("\\x.\\y.\\z.(x z) y")).result) ==
        "(a -o b -o c) -o b -o a -o c");
}

TEST_CASE("every Klein instance of a principal typing is a valid typing") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 2; ++k) {
      for (const auto& code : enumerate_terms(n, k)) {
        const LinearTerm t = from_canonical(code);
        const PrincipalTyping p = infer_principal_type(t);
        REQUIRE(p.wire_types.size() == wire_paths(t.term()).size());
        std::map<std::size_t, Klein> assignment;
        for (std::size_t id = 0; id < 3 * n + 2; ++id) assignment[id] = klein_elements[pick(rng)];
        WireColoring c;
        for (const auto& w : p.wire_types) c.push_back(instantiate(w, assignment));
        CHECK(is_valid_three_typing(t, c));
      }
    }
  }
}

TEST_CASE("proper 3-typings agree with exhaustive wire assignment") {
  for (std::size_t n = 1; n <= 5; n += 2) {
    for (const auto& code : enumerate_terms(n, 0)) {
      const LinearTerm t = from_canonical(code);
      const auto proper = three_typings(t, true);
      CAPTURE(to_string(t));
      CHECK(proper.size() == oracle::brute_proper_typings(t.term()));
      for (const auto& c : proper) CHECK(is_proper_three_typing(t, c));
      // without properness every choice of binder types works
      const auto all = three_typings(t, false);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < term_size(t).abstractions; ++i) expected *= 4;
      CHECK(all.size() == expected);
      for (const auto& c : all) CHECK(is_valid_three_typing(t, c));
    }
  }
}

TEST_CASE("decomposable terms have no proper 3-typing") {
  const LinearTerm t = parse_judgment("\\x.x (\\y.y)");
  CHECK(three_typings(t, true).empty());
  CHECK_FALSE(has_proper_three_typing(t));
  CHECK(has_proper_three_typing(parse_judgment("\\x.x")));
}

TEST_CASE("invalid colorings are detected") {
  const LinearTerm t = parse_judgment(kComposition);
  WireColoring c = propagate_klein(t, {R, G, R});
  c[4] = G;
  CHECK_FALSE(is_valid_three_typing(t, c));
  CHECK_FALSE(is_valid_three_typing(t, WireColoring{one, R}));
  const LinearTerm i = parse_judgment("\\x.x");
  CHECK(is_valid_three_typing(i, {one, one}));
  CHECK_FALSE(is_proper_three_typing(i, {one, one}));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(three_typings(parse_judgment("x |- x"), true), InvalidArgument);
  CHECK_THROWS_AS(propagate_klein(parse_judgment(kComposition), {R}), InvalidArgument);
  CHECK(propagate_klein(parse_judgment("x, y |- x y"), {R, G}) == WireColoring{B, R, G});
}
