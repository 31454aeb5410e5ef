#include <doctest.h>

#include "lambdamap/enumeration.hpp"
#include "lambdamap/errors.hpp"
#include "lambdamap/parser.hpp"
#include "lambdamap/term_ops.hpp"

using namespace lambdamap;

namespace {

LinearityViolation violation_of(std::string_view text) {
  try {
    parse_judgment(text);
  } catch (const LinearityError& e) {
    return e.kind();
  }
  FAIL("no linearity error for " << text);
  return LinearityViolation::unbound_variable;
}

std::size_t parse_error_offset(std::string_view text) {
  try {
    parse_judgment(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("printing") {
  CHECK(to_string(parse_judgment("\\x.\\y.\\z.x (y z)")) == "\\x.\\y.\\z.x (y z)");
  CHECK(to_string(parse_judgment("\\x.\\y.\\z.(x z) y")) == "\\x.\\y.\\z.x z y");
  CHECK(to_string(parse_judgment("y |- (\\x.x) y")) == "y |- (\\x.x) y");
  CHECK(to_string(parse_judgment("f, g |- f (\\x.g x)")) == "f, g |- f (\\x.g x)");
  CHECK(to_string(parse_judgment("  a ,b|-  a b ")) == "a, b |- a b");
}

TEST_CASE("printed terms parse back to the same alpha class") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 3 && k <= n + 1; ++k) {
      for (const auto& c : enumerate_terms(n, k)) {
        const LinearTerm t = from_canonical(c);
        const LinearTerm back = parse_judgment(to_string(t));
        CHECK(back.term() == t.term());
        CHECK(alpha_canonical(back) == c);
      }
    }
  }
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(parse_error_offset("") == 0);
  CHECK(parse_error_offset("\\x") == 2);
  CHECK(parse_error_offset("(x") == 2);
  CHECK(parse_error_offset("\\x.x )") == 5);
  CHECK(parse_error_offset("x |- \\") == 6);
  CHECK(parse_error_offset("1x |- x") == 0);
  CHECK(parse_error_offset("\\x.x + x") == 5);
  CHECK_THROWS_AS(parse_raw_term("\\.x"), ParseError);
}

TEST_CASE("linearity violations") {
  CHECK(violation_of("\\x.x x") == LinearityViolation::variable_used_twice);
  CHECK(violation_of("x") == LinearityViolation::unbound_variable);
  CHECK(violation_of("x, y |- x") == LinearityViolation::context_variable_unused);
  CHECK(violation_of("\\x.\\y.x") == LinearityViolation::binder_unused);
  CHECK(violation_of("\\x.\\x.x") == LinearityViolation::binder_unused);
  CHECK(violation_of("x, x |- x x") == LinearityViolation::duplicate_context_variable);
  CHECK_THROWS_AS(parse_term("x y", {"x"}), LinearityError);
  CHECK_NOTHROW(parse_term("x y", {"y", "x"}));
}

TEST_CASE("derivations count exchanges") {
  const Derivation d = check_linear({"x", "y"}, parse_raw_term("y x"));
  CHECK(d.rule == Derivation::Rule::application);
  CHECK(d.exchanges == 1);
  REQUIRE(d.premises.size() == 2);
  CHECK(d.premises[0].context == Context{"y"});
  CHECK(d.premises[1].context == Context{"x"});
  CHECK(check_linear({"x", "y"}, parse_raw_term("x y")).exchanges == 0);
  const Derivation lam = check_linear({}, parse_raw_term("\\x.\\y.y x"));
  CHECK(lam.rule == Derivation::Rule::abstraction);
  CHECK(lam.premises[0].context == Context{"x"});
  CHECK(lam.premises[0].premises[0].context == (Context{"x", "y"}));
}

TEST_CASE("alpha equivalence and canonical codes") {
  CHECK(alpha_equivalent(parse_judgment("\\a.\\b.a b"), parse_judgment("\\x.\\y.x y")));
  CHECK_FALSE(alpha_equivalent(parse_judgment("\\a.\\b.a b"), parse_judgment("\\x.\\y.y x")));
  CHECK(alpha_equivalent(parse_judgment("p, q |- p q"), parse_judgment("x, y |- x y")));
  // the context is ordered
  CHECK_FALSE(alpha_equivalent(parse_judgment("x, y |- x y"), parse_judgment("y, x |- x y")));
  using C = CanonicalTerm;
  CHECK(alpha_canonical(parse_judgment("\\x.x")).code() == std::vector<std::int32_t>{C::abstraction, 0});
  CHECK(alpha_canonical(parse_judgment("x, y |- y x")).code() ==
        std::vector<std::int32_t>{C::application, C::free_token(1), C::free_token(0)});
  CHECK(to_string(alpha_canonical(parse_judgment("\\x.\\y.\\z.x (y z)"))) == "\\ \\ \\ @ #0 @ #1 #2");
  CHECK(to_string(from_canonical(alpha_canonical(parse_judgment("b, a |- \\c.a (b c)")))) ==
        "x1, x2 |- \\x3.x2 (x1 x3)");
}

TEST_CASE("subterms carry their induced contexts") {
  const auto subs = subterms(parse_judgment("\\x.\\y.\\z.x (y z)"));
  REQUIRE(subs.size() == 8);
  CHECK(to_string(subs[0]) == "\\x.\\y.\\z.x (y z)");
  CHECK(to_string(subs[3]) == "x, y, z |- x (y z)");
  CHECK(to_string(subs[4]) == "x |- x");
  CHECK(to_string(subs[5]) == "y, z |- y z");
  CHECK(to_string(subs[6]) == "y |- y");
  CHECK(to_string(subs[7]) == "z |- z");
  CHECK(to_string(subterms(parse_judgment("y, x |- x y"))[0]) == "y, x |- x y");
}

TEST_CASE("decomposability") {
  CHECK(is_decomposable(parse_judgment("\\x.x (\\y.y)")));
  CHECK(is_decomposable(parse_judgment("x |- x (\\y.y)")));
  CHECK_FALSE(is_decomposable(parse_judgment("\\x.x")));
  CHECK_FALSE(is_decomposable(parse_judgment("\\x.\\y.\\z.x (y z)")));
  CHECK_FALSE(is_decomposable(parse_judgment("x |- x")));
}

TEST_CASE("lambda lifting closes over the context in order") {
  const LinearTerm lifted = lambda_lift(parse_judgment("x, y |- y x"));
  CHECK(lifted.is_closed());
  CHECK(to_string(lifted) == "\\x.\\y.y x");
  const TermSize s = term_size(lifted);
  CHECK(s.applications == 1);
  CHECK(s.abstractions == 2);
  CHECK(s.total() == 3);
}
