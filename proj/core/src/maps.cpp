#include "lambdamap/maps.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "lambdamap/errors.hpp"

namespace lambdamap {

namespace {

void require_sorted_unique(const std::vector<DartLabel>& darts) {
  for (std::size_t i = 1; i < darts.size(); ++i) {
    if (darts[i - 1] >= darts[i]) throw MalformedMap("dart ids must be sorted and distinct");
  }
}

bool is_transitive(const Permutation& v, const Permutation& e) {
  const std::size_t n = v.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Dart> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart next : {v(d), e(d)}) {
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  return reached == n;
}

CanonicalMap bfs_canonical(const Permutation& v, const Permutation& e, Dart root,
                           const std::vector<Dart>& boundary) {
  const std::size_t n = v.size();
  constexpr Dart unassigned = static_cast<Dart>(-1);
  std::vector<Dart> new_id(n, unassigned);
  std::vector<Dart> order;
  order.reserve(n);
  new_id[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    Dart d = order[head];
    for (Dart next : {v(d), e(d)}) {
      if (new_id[next] == unassigned) {
        new_id[next] = static_cast<Dart>(order.size());
        order.push_back(next);
      }
    }
  }
  if (order.size() != n) throw MalformedMap("map is not transitive");
  CanonicalMap c;
  c.v.resize(n);
  c.e.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.v[i] = new_id[v(order[i])];
    c.e[i] = new_id[e(order[i])];
  }
  c.boundary.reserve(boundary.size());
  for (Dart b : boundary) c.boundary.push_back(new_id[b]);
  return c;
}

unsigned genus_from_counts(const CycleCounts& c) {
  const long long chi = static_cast<long long>(c.vertices) - static_cast<long long>(c.edges) +
                        static_cast<long long>(c.faces);
  const long long twice_genus = 2 - chi;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw MalformedMap("Euler characteristic " + std::to_string(chi) + " gives no integer genus");
  }
  return static_cast<unsigned>(twice_genus / 2);
}

}  // namespace

ClassicalMap::ClassicalMap(std::vector<DartLabel> darts, Permutation v, Permutation e,
                           std::optional<Dart> root)
    : darts_(std::move(darts)), v_(std::move(v)), e_(std::move(e)), root_(root) {
  require_sorted_unique(darts_);
  if (v_.size() != darts_.size() || e_.size() != darts_.size()) {
    throw MalformedMap("permutation size does not match dart count");
  }
  if (darts_.empty()) throw MalformedMap("a classical map needs at least one edge");
  if (!e_.has_order_dividing(2) || !e_.fixed_points().empty()) {
    throw MalformedMap("e must be a fixed-point-free involution");
  }
  if (root_ && *root_ >= darts_.size()) throw MalformedMap("root dart out of range");
  if (!is_transitive(v_, e_)) throw MalformedMap("<v, e> does not act transitively");
}

bool ClassicalMap::is_trivalent() const { return v_.has_order_dividing(3) && v_.fixed_points().empty(); }

RootedTrivalentMap::RootedTrivalentMap(std::vector<DartLabel> darts, Permutation v, Permutation e,
                                       Dart root, std::vector<Dart> boundary)
    : darts_(std::move(darts)),
      v_(std::move(v)),
      e_(std::move(e)),
      root_(root),
      boundary_(std::move(boundary)) {
  require_sorted_unique(darts_);
  const std::size_t n = darts_.size();
  if (n == 0) throw MalformedMap("a rooted map needs a root dart");
  if (v_.size() != n || e_.size() != n) throw MalformedMap("permutation size does not match dart count");
  if (root_ >= n) throw MalformedMap("root dart out of range");
  if (!v_.has_order_dividing(3)) throw MalformedMap("v must satisfy v^3 = 1");
  if (!e_.has_order_dividing(2)) throw MalformedMap("e must be an involution");
  const auto v_fixed = v_.fixed_points();
  if (v_fixed.size() != 1 || v_fixed.front() != root_) {
    throw MalformedMap("the root must be the unique fixed point of v");
  }
  std::vector<bool> on_boundary(n, false);
  for (Dart b : boundary_) {
    if (b >= n) throw MalformedMap("boundary dart out of range");
    if (on_boundary[b]) throw MalformedMap("boundary darts must be distinct");
    on_boundary[b] = true;
  }
  const auto e_fixed = e_.fixed_points();
  if (e_fixed.size() != boundary_.size() ||
      !std::all_of(e_fixed.begin(), e_fixed.end(), [&](Dart d) { return on_boundary[d]; })) {
    throw MalformedMap("the boundary must list exactly the fixed points of e");
  }
  if (!is_transitive(v_, e_)) throw MalformedMap("<v, e> does not act transitively");
}

RootedTrivalentMap RootedTrivalentMap::trivial() {
  return RootedTrivalentMap({0}, Permutation::identity(1), Permutation::identity(1), 0, {0});
}

Permutation face_permutation(const ClassicalMap& m) { return compose(m.v().inverse(), m.e()); }
Permutation face_permutation(const RootedTrivalentMap& m) { return compose(m.v().inverse(), m.e()); }

CycleCounts cycle_counts(const ClassicalMap& m) {
  return {m.v().cycle_count(), m.e().cycle_count(), face_permutation(m).cycle_count()};
}

CycleCounts completed_cycle_counts(const RootedTrivalentMap& m) {
  const std::size_t n = m.size();
  const std::size_t k = m.degree();
  std::vector<Dart> v(n + k);
  std::vector<Dart> e(n + k);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = m.v()(static_cast<Dart>(i));
    e[i] = m.e()(static_cast<Dart>(i));
  }
  for (std::size_t j = 0; j < k; ++j) {
    const Dart fresh = static_cast<Dart>(n + j);
    const Dart b = m.boundary()[j];
    v[fresh] = fresh;
    e[fresh] = b;
    e[b] = fresh;
  }
  const Permutation vp(std::move(v));
  const Permutation ep(std::move(e));
  return {vp.cycle_count(), ep.cycle_count(), compose(vp.inverse(), ep).cycle_count()};
}

unsigned genus(const ClassicalMap& m) { return genus_from_counts(cycle_counts(m)); }
unsigned genus(const RootedTrivalentMap& m) { return genus_from_counts(completed_cycle_counts(m)); }

CanonicalMap canonical_form(const RootedTrivalentMap& m) {
  return bfs_canonical(m.v(), m.e(), m.root(), m.boundary());
}

CanonicalMap canonical_form(const ClassicalMap& m) {
  if (!m.root()) throw InvalidArgument("canonical form needs a rooted map");
  return bfs_canonical(m.v(), m.e(), *m.root(), {});
}

RootedTrivalentMap from_canonical(const CanonicalMap& c) {
  std::vector<DartLabel> labels(c.v.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  return RootedTrivalentMap(std::move(labels), Permutation(c.v), Permutation(c.e), 0, c.boundary);
}

bool rooted_isomorphic(const RootedTrivalentMap& a, const RootedTrivalentMap& b) {
  if (a.size() != b.size() || a.degree() != b.degree()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool rooted_isomorphic(const ClassicalMap& a, const ClassicalMap& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

RootedTrivalentMap relabel(const RootedTrivalentMap& m, const std::vector<DartLabel>& labels) {
  const std::size_t n = m.size();
  if (labels.size() != n) throw InvalidArgument("relabel needs one label per dart");
  // Position of dart i in the new sorted label order.
  std::vector<Dart> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Dart>(i);
  std::sort(order.begin(), order.end(), [&](Dart a, Dart b) { return labels[a] < labels[b]; });
  std::vector<Dart> position(n);
  std::vector<DartLabel> sorted(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[order[i]] = static_cast<Dart>(i);
    sorted[i] = labels[order[i]];
  }
  std::vector<Dart> v(n);
  std::vector<Dart> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[position[i]] = position[m.v()(static_cast<Dart>(i))];
    e[position[i]] = position[m.e()(static_cast<Dart>(i))];
  }
  std::vector<Dart> boundary;
  for (Dart b : m.boundary()) boundary.push_back(position[b]);
  return RootedTrivalentMap(std::move(sorted), Permutation(std::move(v)), Permutation(std::move(e)),
                            position[m.root()], std::move(boundary));
}

ClassicalMap smooth_root(const RootedTrivalentMap& m) {
  if (m.trivalent_vertex_count() == 0) throw VertexlessMap("the trivial map has no vertex to smooth");
  if (!m.is_closed()) throw InvalidArgument("smooth_root requires a closed map");

  const Dart x = m.e()(m.root());
  const Dart p1 = m.v()(x);
  const Dart p2 = m.v()(p1);
  const Dart a1 = m.e()(p1);
  const Dart a2 = m.e()(p2);
  if (a1 == p2) throw VertexlessMap("smoothing leaves a vertexless circle");

  const std::size_t n = m.size();
  constexpr Dart removed = static_cast<Dart>(-1);
  std::vector<Dart> new_index(n, removed);
  std::vector<DartLabel> labels;
  labels.reserve(n - 4);
  for (std::size_t i = 0; i < n; ++i) {
    const Dart d = static_cast<Dart>(i);
    if (d == m.root() || d == x || d == p1 || d == p2) continue;
    new_index[d] = static_cast<Dart>(labels.size());
    labels.push_back(m.darts()[d]);
  }
  std::vector<Dart> v(labels.size());
  std::vector<Dart> e(labels.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Dart d = static_cast<Dart>(i);
    if (new_index[d] == removed) continue;
    v[new_index[d]] = new_index[m.v()(d)];
    Dart partner = m.e()(d);
    if (d == a1) partner = a2;
    if (d == a2) partner = a1;
    e[new_index[d]] = new_index[partner];
  }
  return ClassicalMap(std::move(labels), Permutation(std::move(v)), Permutation(std::move(e)),
                      new_index[a1]);
}

}  // namespace lambdamap
