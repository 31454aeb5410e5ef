#include "lambdamap/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "lambdamap/bijection.hpp"
#include "lambdamap/enumeration.hpp"
#include "lambdamap/errors.hpp"
#include "lambdamap/graph.hpp"
#include "lambdamap/term_ops.hpp"
#include "lambdamap/typing.hpp"

namespace lambdamap {

namespace {

// Edges in BFS order from vertex 0, so each new edge touches a colored one.
std::vector<std::size_t> edge_order(const UndirectedGraph& g) {
  std::vector<std::vector<std::size_t>> incident(g.vertex_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    incident[g.edges[i].u].push_back(i);
    if (!g.edges[i].is_loop()) incident[g.edges[i].w].push_back(i);
  }
  std::vector<std::size_t> order;
  std::vector<bool> seen_edge(g.edges.size(), false);
  std::vector<bool> seen_vertex(g.vertex_count, false);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < g.vertex_count; ++start) {
    if (seen_vertex[start]) continue;
    seen_vertex[start] = true;
    queue.push_back(start);
    for (std::size_t head = queue.size() - 1; head < queue.size(); ++head) {
      for (std::size_t id : incident[queue[head]]) {
        if (seen_edge[id]) continue;
        seen_edge[id] = true;
        order.push_back(id);
        const auto& edge = g.edges[id];
        const std::size_t other = edge.u == queue[head] ? edge.w : edge.u;
        if (!seen_vertex[other]) {
          seen_vertex[other] = true;
          queue.push_back(other);
        }
      }
    }
  }
  return order;
}

template <typename Visit>
void colorings(const ClassicalMap& m, Visit visit) {
  if (!m.is_trivalent()) throw InvalidArgument("edge 3-coloring needs a trivalent map");
  const UndirectedGraph g = underlying_graph(m);
  for (const auto& edge : g.edges) {
    if (edge.is_loop()) return;
  }
  const std::vector<std::size_t> order = edge_order(g);
  std::vector<std::uint8_t> used(g.vertex_count, 0);
  EdgeColoring coloring(g.edges.size(), Klein::one);

  auto step = [&](auto& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      visit(coloring);
      return;
    }
    const auto& edge = g.edges[order[pos]];
    for (Klein color : klein_colors) {
      const auto bit = static_cast<std::uint8_t>(1u << static_cast<unsigned>(color));
      if ((used[edge.u] & bit) || (used[edge.w] & bit)) continue;
      used[edge.u] |= bit;
      used[edge.w] |= bit;
      coloring[order[pos]] = color;
      self(self, pos + 1);
      used[edge.u] &= static_cast<std::uint8_t>(~bit);
      used[edge.w] &= static_cast<std::uint8_t>(~bit);
    }
    coloring[order[pos]] = Klein::one;
  };
  step(step, 0);
}

}  // namespace

std::vector<EdgeColoring> edge_three_colorings(const ClassicalMap& m) {
  std::vector<EdgeColoring> out;
  colorings(m, [&](const EdgeColoring& c) { out.push_back(c); });
  return out;
}

std::size_t count_edge_three_colorings(const ClassicalMap& m) {
  std::size_t count = 0;
  colorings(m, [&](const EdgeColoring&) { ++count; });
  return count;
}

CorrespondenceCounts typing_coloring_counts(const LinearTerm& t) {
  CorrespondenceCounts counts;
  const ClassicalMap smoothed = smooth_root(term_to_map(t));
  counts.proper_typings = three_typings(t, true).size();
  counts.edge_colorings = count_edge_three_colorings(smoothed);
  return counts;
}

bool typing_coloring_correspondence(const LinearTerm& t) { return typing_coloring_counts(t).agree(); }

std::uint64_t FourColorReport::total_terms() const {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.terms;
  return total;
}

FourColorReport fourct_desk_check(std::size_t max_size, unsigned workers) {
  FourColorReport report;
  workers = std::max(1u, workers);
  for (std::size_t n = 1; n <= max_size; n += 2) {
    const std::vector<CanonicalTerm> terms =
        enumerate_terms(n, 0, TermFilter::planar_indecomposable, {workers});
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> passed{0};
    std::mutex failures_mutex;
    std::vector<CanonicalTerm> failures;
    auto work = [&] {
      for (std::size_t i = next++; i < terms.size(); i = next++) {
        if (has_proper_three_typing(from_canonical(terms[i]))) {
          ++passed;
        } else {
          std::lock_guard lock(failures_mutex);
          failures.push_back(terms[i]);
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
      work();
    }
    std::sort(failures.begin(), failures.end());
    report.rows.push_back({n, terms.size(), passed.load()});
    report.counterexamples.insert(report.counterexamples.end(), failures.begin(), failures.end());
  }
  return report;
}

}  // namespace lambdamap
