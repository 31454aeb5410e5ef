#include "lambdamap/graph.hpp"

#include <algorithm>
#include <functional>

#include "lambdamap/errors.hpp"

namespace lambdamap {

namespace {

template <typename Map>
UndirectedGraph graph_of(const Map& m) {
  const std::size_t n = m.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> vertex_of(n, none);
  UndirectedGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertex_of[i] != none) continue;
    for (Dart d = static_cast<Dart>(i); vertex_of[d] == none; d = m.v()(d)) vertex_of[d] = g.vertex_count;
    ++g.vertex_count;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Dart d = static_cast<Dart>(i);
    const Dart partner = m.e()(d);
    if (partner <= d) continue;  // fixed points and already-seen pairs
    const std::size_t idx = g.add_edge(vertex_of[d], vertex_of[partner]);
    g.edges[idx].first_dart = d;
    g.edges[idx].second_dart = partner;
  }
  return g;
}

std::vector<std::vector<std::size_t>> multiplicities(const UndirectedGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count, std::vector<std::size_t>(g.vertex_count, 0));
  for (const auto& edge : g.edges) {
    ++adj[edge.u][edge.w];
    if (!edge.is_loop()) ++adj[edge.w][edge.u];
  }
  return adj;
}

}  // namespace

std::size_t UndirectedGraph::add_edge(std::size_t u, std::size_t w) {
  if (u >= vertex_count || w >= vertex_count) throw InvalidArgument("edge endpoint out of range");
  edges.push_back(Edge{u, w, 0, 0});
  return edges.size() - 1;
}

std::size_t UndirectedGraph::degree(std::size_t vertex) const {
  std::size_t deg = 0;
  for (const auto& edge : edges) {
    if (edge.u == vertex) ++deg;
    if (edge.w == vertex) ++deg;
  }
  return deg;
}

bool UndirectedGraph::is_connected() const {
  if (vertex_count == 0) return true;
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (const auto& edge : edges) {
    adj[edge.u].push_back(edge.w);
    adj[edge.w].push_back(edge.u);
  }
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count;
}

UndirectedGraph underlying_graph(const RootedTrivalentMap& m) { return graph_of(m); }
UndirectedGraph underlying_graph(const ClassicalMap& m) { return graph_of(m); }

std::vector<std::size_t> bridges(const UndirectedGraph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("bridges requires a connected graph");
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge)
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& edge = g.edges[i];
    if (edge.is_loop()) continue;
    adj[edge.u].emplace_back(edge.w, i);
    adj[edge.w].emplace_back(edge.u, i);
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> discovery(n, none);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> result;

  struct Frame {
    std::size_t vertex;
    std::size_t parent_edge;
    std::size_t next = 0;
  };
  std::size_t clock = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (discovery[start] != none) continue;
    std::vector<Frame> stack{{start, none}};
    discovery[start] = low[start] = clock++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < adj[top.vertex].size()) {
        const auto [w, edge] = adj[top.vertex][top.next++];
        if (edge == top.parent_edge) continue;
        if (discovery[w] == none) {
          discovery[w] = low[w] = clock++;
          stack.push_back({w, edge});
        } else {
          low[top.vertex] = std::min(low[top.vertex], discovery[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const std::size_t parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > discovery[parent]) result.push_back(done.parent_edge);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_bridgeless(const RootedTrivalentMap& m) {
  if (!m.is_closed()) throw InvalidArgument("is_bridgeless requires a closed map");
  const UndirectedGraph g = underlying_graph(m);
  for (std::size_t idx : bridges(g)) {
    const auto& edge = g.edges[idx];
    if (edge.first_dart != m.root() && edge.second_dart != m.root()) return false;
  }
  return true;
}

bool graph_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  const std::size_t n = a.vertex_count;
  const auto adj_a = multiplicities(a);
  const auto adj_b = multiplicities(b);
  std::vector<std::size_t> deg_a(n);
  std::vector<std::size_t> deg_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    deg_a[i] = a.degree(i);
    deg_b[i] = b.degree(i);
  }
  {
    auto sa = deg_a;
    auto sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Visit a's vertices in BFS order so each new vertex is adjacent to mapped ones.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = true;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!queued[w] && adj_a[order[head]][w] > 0) {
          queued[w] = true;
          order.push_back(w);
        }
      }
    }
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, none);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t u = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || deg_b[cand] != deg_a[u] || adj_a[u][u] != adj_b[cand][cand]) continue;
      bool consistent = true;
      for (std::size_t prev = 0; prev < depth && consistent; ++prev) {
        const std::size_t p = order[prev];
        consistent = adj_a[u][p] == adj_b[cand][image[p]];
      }
      if (!consistent) continue;
      image[u] = cand;
      used[cand] = true;
      if (extend(depth + 1)) return true;
      used[cand] = false;
      image[u] = none;
    }
    return false;
  };
  return extend(0);
}

UndirectedGraph petersen_graph() {
  UndirectedGraph g;
  g.vertex_count = 10;
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace lambdamap
