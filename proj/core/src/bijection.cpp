#include "lambdamap/bijection.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "lambdamap/errors.hpp"
#include "lambdamap/graph.hpp"
#include "lambdamap/term_ops.hpp"

namespace lambdamap {

namespace {

class MapBuilder {
 public:
  explicit MapBuilder(const Context& context) : boundary_(context.size()) {
    for (std::size_t i = 0; i < context.size(); ++i) scope_[context[i]].push_back({true, static_cast<Dart>(i)});
  }

  RootedTrivalentMap build(const Term& t) {
    const Dart root = fresh();
    wire(t, root);
    std::vector<DartLabel> labels(v_.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    return RootedTrivalentMap(std::move(labels), Permutation(std::move(v_)), Permutation(std::move(e_)), root,
                              std::move(boundary_));
  }

 private:
  struct Binding {
    bool free;
    Dart value;  // context position when free, parameter dart when bound
  };

  Dart fresh() {
    const Dart d = static_cast<Dart>(v_.size());
    v_.push_back(d);
    e_.push_back(d);
    return d;
  }

  void join(Dart a, Dart b) {
    e_[a] = b;
    e_[b] = a;
  }

  // Three new darts forming one counterclockwise vertex cycle; the first one
  // faces the consumer.
  std::array<Dart, 3> vertex(Dart consumer) {
    const std::array<Dart, 3> d{fresh(), fresh(), fresh()};
    v_[d[0]] = d[1];
    v_[d[1]] = d[2];
    v_[d[2]] = d[0];
    join(consumer, d[0]);
    return d;
  }

  // Builds the diagram of `t` whose outgoing wire ends at dart `consumer`.
  void wire(const Term& t, Dart consumer) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        const Binding b = scope_.at(t.name()).back();
        if (b.free) {
          boundary_[b.value] = consumer;  // dangling edge, e-fixed
        } else {
          join(consumer, b.value);
        }
        return;
      }
      case Term::Kind::application: {
        const auto d = vertex(consumer);
        wire(t.function(), d[PortConvention::function]);
        wire(t.argument(), d[PortConvention::argument]);
        return;
      }
      case Term::Kind::abstraction: {
        const auto d = vertex(consumer);
        auto& stack = scope_[t.name()];
        stack.push_back({false, d[PortConvention::parameter]});
        wire(t.body(), d[PortConvention::body]);
        scope_[t.name()].pop_back();
        return;
      }
    }
  }

  std::vector<Dart> v_;
  std::vector<Dart> e_;
  std::vector<Dart> boundary_;
  std::unordered_map<std::string, std::vector<Binding>> scope_;
};

// Root-vertex decomposition on mutable copies of v and e. Each recursive call
// owns a sub-map given by its root (v-fixed) and boundary (e-fixed darts).
class Decomposer {
 public:
  explicit Decomposer(const RootedTrivalentMap& m)
      : v_(m.v().image().begin(), m.v().image().end()),
        e_(m.e().image().begin(), m.e().image().end()),
        name_(m.size()),
        stamp_(m.size(), 0) {}

  LinearTerm run(const RootedTrivalentMap& m) {
    Context context;
    for (Dart b : m.boundary()) {
      name_[b] = fresh_name();
      context.push_back(name_[b]);
    }
    Term t = decompose(m.root(), m.boundary());
    return LinearTerm(std::move(context), std::move(t));
  }

 private:
  std::string fresh_name() { return "x" + std::to_string(++names_used_); }

  // Marks the component of `start` in the sub-map with the root vertex
  // removed and returns whether `target` was reached.
  bool mark_component(Dart start, Dart target, Dart root, Dart x, Dart p1, Dart p2) {
    ++generation_;
    bool found = false;
    std::vector<Dart> stack{start};
    stamp_[start] = generation_;
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      if (d == target) found = true;
      for (Dart next : {v_[d], e_[d]}) {
        if (next == root || next == x || next == p1 || next == p2) continue;
        if (stamp_[next] != generation_) {
          stamp_[next] = generation_;
          stack.push_back(next);
        }
      }
    }
    return found;
  }

  Term decompose(Dart root, const std::vector<Dart>& boundary) {
    if (e_[root] == root) return Term::var(name_[root]);

    const Dart x = e_[root];
    const Dart p1 = v_[x];  // argument / parameter port
    const Dart p2 = v_[p1];  // function / body port
    if (v_[p2] != x || p1 == x) throw InternalError("root-adjacent vertex is not trivalent");

    const bool p1_dangles = e_[p1] == p1;
    const bool p2_dangles = e_[p2] == p2;
    bool abstraction = false;
    bool loop = false;
    if (!p1_dangles && !p2_dangles) {
      if (e_[p1] == p2) {
        abstraction = loop = true;
      } else {
        abstraction = mark_component(e_[p1], e_[p2], root, x, p1, p2);
      }
    }

    if (abstraction) {
      const std::string binder = fresh_name();
      std::vector<Dart> inner = boundary;
      if (loop) {
        e_[p2] = p2;
        name_[p2] = binder;
        inner.push_back(p2);
      } else {
        const Dart bound_use = e_[p1];
        e_[bound_use] = bound_use;
        name_[bound_use] = binder;
        inner.push_back(bound_use);
      }
      v_[p2] = p2;
      return Term::abs(binder, decompose(p2, inner));
    }

    // Application: split the boundary between the function side (reached
    // from p2) and the argument side.
    ++generation_;
    if (p2_dangles) {
      stamp_[p2] = generation_;
    } else {
      mark_component(e_[p2], p2, root, x, p1, p2);
      stamp_[p2] = generation_;
    }
    const std::size_t function_side = generation_;
    std::vector<Dart> function_boundary;
    std::vector<Dart> argument_boundary;
    for (Dart b : boundary) {
      (stamp_[b] == function_side ? function_boundary : argument_boundary).push_back(b);
    }
    v_[p1] = p1;
    v_[p2] = p2;
    Term function = decompose(p2, function_boundary);
    Term argument = decompose(p1, argument_boundary);
    return Term::app(std::move(function), std::move(argument));
  }

  std::vector<Dart> v_;
  std::vector<Dart> e_;
  std::vector<std::string> name_;
  std::vector<std::size_t> stamp_;
  std::size_t generation_ = 0;
  std::size_t names_used_ = 0;
};

template <typename Map>
void write_dot_body(const Map& m, std::ostringstream& out, std::optional<Dart> root,
                    const std::vector<Dart>& boundary) {
  const UndirectedGraph g = underlying_graph(m);
  std::vector<std::size_t> vertex_of(m.size());
  {
    std::size_t next = 0;
    std::vector<bool> seen(m.size(), false);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (seen[i]) continue;
      for (Dart d = static_cast<Dart>(i); !seen[d]; d = m.v()(d)) {
        seen[d] = true;
        vertex_of[d] = next;
      }
      ++next;
    }
  }
  for (std::size_t u = 0; u < g.vertex_count; ++u) {
    out << "  v" << u;
    if (root && vertex_of[*root] == u) {
      out << " [shape=box, label=\"root\"]";
    } else {
      out << " [shape=circle, label=\"\"]";
    }
    out << ";\n";
  }
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    out << "  b" << i << " [shape=plaintext, label=\"" << i + 1 << "\"];\n";
  }
  for (const auto& edge : g.edges) {
    out << "  v" << edge.u << " -- v" << edge.w << " [label=\"" << m.darts()[edge.first_dart] << "/"
        << m.darts()[edge.second_dart] << "\"];\n";
  }
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    out << "  v" << vertex_of[boundary[i]] << " -- b" << i << " [label=\"" << m.darts()[boundary[i]]
        << "\", style=dashed];\n";
  }
}

}  // namespace

RootedTrivalentMap term_to_map(const LinearTerm& t) { return MapBuilder(t.context()).build(t.term()); }

LinearTerm map_to_term(const RootedTrivalentMap& m) { return Decomposer(m).run(m); }

bool roundtrip_check(const LinearTerm& t) {
  const RootedTrivalentMap m = term_to_map(t);
  const LinearTerm back = map_to_term(m);
  if (!alpha_equivalent(t, back)) return false;
  return rooted_isomorphic(term_to_map(back), m);
}

std::string to_dot(const RootedTrivalentMap& m) {
  std::ostringstream out;
  out << "graph map {\n";
  write_dot_body(m, out, m.root(), m.boundary());
  out << "}\n";
  return out.str();
}

std::string to_dot(const ClassicalMap& m) {
  std::ostringstream out;
  out << "graph map {\n";
  write_dot_body(m, out, m.root(), {});
  out << "}\n";
  return out.str();
}

}  // namespace lambdamap
