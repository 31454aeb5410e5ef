#include <doctest.h>

#include <random>
#include <set>

#include "lambdamap/bijection.hpp"
#include "lambdamap/enumeration.hpp"
#include "lambdamap/map_json.hpp"
#include "lambdamap/parser.hpp"
#include "lambdamap/term_ops.hpp"

using namespace lambdamap;

namespace {

std::size_t occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("identity term") {
  const RootedTrivalentMap m = term_to_map(parse_judgment("\\x.x"));
  CHECK(m.root() == 0);
  CHECK(m.v() == Permutation::from_cycles(4, {{1, 2, 3}}));
  CHECK(m.e() == Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  CHECK(face_permutation(m) == Permutation::from_cycles(4, {{0, 3, 1}}));
}

TEST_CASE("a free variable is the trivial map") {
  const RootedTrivalentMap m = term_to_map(parse_judgment("x |- x"));
  CHECK(to_json(m) == to_json(RootedTrivalentMap::trivial()));
  CHECK(to_string(map_to_term(RootedTrivalentMap::trivial())) == "x1 |- x1");
}

TEST_CASE("port convention") {
  // application: continuation -> argument -> function
  const RootedTrivalentMap app = term_to_map(parse_judgment("f, a |- f a"));
  const Dart top = app.e()(app.root());
  CHECK(app.v()(top) == app.boundary()[1]);
  CHECK(app.v()(app.v()(top)) == app.boundary()[0]);
  // abstraction: root -> parameter -> body
  const RootedTrivalentMap lam = term_to_map(parse_judgment("g |- \\y.g y"));
  const Dart l = lam.e()(lam.root());
  const Dart param = lam.v()(l);
  const Dart body = lam.v()(param);
  const Dart below = lam.e()(body);  // continuation dart of the application
  CHECK(lam.e()(param) == lam.v()(below));
  CHECK(lam.v()(lam.v()(below)) == lam.boundary()[0]);
}

TEST_CASE("sizes: one trivalent vertex per node and one boundary dart per free variable") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 3 && k <= n + 1; ++k) {
      for (const auto& c : enumerate_terms(n, k)) {
        const RootedTrivalentMap m = term_to_map(from_canonical(c));
        CHECK(m.size() == 3 * n + 1);
        CHECK(m.trivalent_vertex_count() == n);
        CHECK(m.degree() == k);
      }
    }
  }
}

TEST_CASE("round trip in both directions") {
  std::mt19937 rng(17);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 3 && k <= n + 1; ++k) {
      for (const auto& c : enumerate_terms(n, k)) {
        const LinearTerm t = from_canonical(c);
        CHECK(roundtrip_check(t));
        // label independence of the inverse
        const RootedTrivalentMap m = term_to_map(t);
        std::vector<DartLabel> labels(m.size());
        for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = 3 * i + 1;
        std::shuffle(labels.begin(), labels.end(), rng);
        CHECK(alpha_canonical(map_to_term(relabel(m, labels))) == c);
      }
    }
  }
}

TEST_CASE("different terms give non-isomorphic maps") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t k = 0; k <= 3 && k <= n + 1; ++k) {
      const auto terms = enumerate_terms(n, k);
      std::set<CanonicalMap> forms;
      for (const auto& c : terms) forms.insert(canonical_form(term_to_map(from_canonical(c))));
      CHECK(forms.size() == terms.size());
    }
  }
}

TEST_CASE("decomposition names") {
  const auto b = map_to_term(term_to_map(parse_judgment("\\f.\\g.\\a.f (g a)")));
  CHECK(to_string(b) == "\\x1.\\x2.\\x3.x1 (x2 x3)");
  const auto open = map_to_term(term_to_map(parse_judgment("p, q |- \\r.q (p r)")));
  CHECK(to_string(open) == "x1, x2 |- \\x3.x2 (x1 x3)");
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(term_to_map(parse_judgment("u, w |- \\x.u (w x)")));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(occurrences(dot, "shape=box") == 1);
  CHECK(occurrences(dot, "shape=circle") == 3);
  CHECK(occurrences(dot, "b0 [shape=plaintext") == 1);
  CHECK(occurrences(dot, "b1 [shape=plaintext") == 1);
  CHECK(occurrences(dot, "style=dashed") == 2);
  const std::string closed = to_dot(smooth_root(term_to_map(parse_judgment("\\x.\\y.\\z.x (y z)"))));
  CHECK(occurrences(closed, "shape=box") == 1);
  CHECK(occurrences(closed, "shape=circle") == 3);
}
