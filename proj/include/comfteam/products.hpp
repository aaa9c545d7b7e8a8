#pragma once

// Strong and lexicographic graph products with a canonical row-major
// product-vertex indexing: (i,j) -> i*|V(H)| + j.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comfteam/graph.hpp"

namespace comfteam {

/// Row-major bijection between factor pairs (i,j) and flat product ids.
struct ProductIndexing {
  int left_count = 0;   // |V(G)|
  int right_count = 0;  // |V(H)|

  int vertex_count() const { return left_count * right_count; }

  int flatten(int i, int j) const {
    if (i < 0 || i >= left_count || j < 0 || j >= right_count)
      throw std::invalid_argument("product pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range");
    return i * right_count + j;
  }

  std::pair<int, int> unflatten(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::invalid_argument("product vertex " + std::to_string(v) +
                                  " out of range");
    return {v / right_count, v % right_count};
  }

  std::string pair_string(int v) const {
    auto [i, j] = unflatten(v);
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  /// Flat id with its factor pair, e.g. "7=(1,1)".
  std::string describe_vertex(int v) const {
    return std::to_string(v) + "=" + pair_string(v);
  }

  /// Set rendering that shows both forms, e.g. "{3=(1,1),5=(2,1)}".
  std::string describe_set(const VertexSet& s) const {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
      if (!first) out += ',';
      out += describe_vertex(v);
      first = false;
    }
    out += '}';
    return out;
  }

  bool matches(const Graph& g, const Graph& h) const {
    return left_count == g.vertex_count() && right_count == h.vertex_count();
  }
};

struct ProductResult {
  Graph graph;
  ProductIndexing indexing;
};

namespace detail {

inline ProductIndexing make_indexing(const Graph& g, const Graph& h) {
  const long long total = static_cast<long long>(g.vertex_count()) *
                          static_cast<long long>(h.vertex_count());
  if (total > std::numeric_limits<int>::max())
    throw std::invalid_argument("product too large: " + std::to_string(total) +
                                " vertices");
  return ProductIndexing{g.vertex_count(), h.vertex_count()};
}

}  // namespace detail

/// G boxtimes H: (i,j)~(k,l) iff the coordinates are pairwise equal or
/// adjacent, and not both equal. |E| = n|E(H)| + m|E(G)| + 2|E(G)||E(H)|.
inline ProductResult strong_product(const Graph& g, const Graph& h) {
  const auto idx = detail::make_indexing(g, h);
  const int m = h.vertex_count();
  const auto g_edges = g.edges();
  const auto h_edges = h.edges();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.vertex_count()) * h_edges.size() +
                static_cast<std::size_t>(m) * g_edges.size() +
                2 * g_edges.size() * h_edges.size());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (const auto& [j, l] : h_edges)
      edges.emplace_back(i * m + j, i * m + l);
  for (const auto& [i, k] : g_edges)
    for (int j = 0; j < m; ++j) edges.emplace_back(i * m + j, k * m + j);
  for (const auto& [i, k] : g_edges)
    for (const auto& [j, l] : h_edges) {
      edges.emplace_back(i * m + j, k * m + l);
      edges.emplace_back(i * m + l, k * m + j);
    }
  return ProductResult{Graph(idx.vertex_count(), edges), idx};
}

/// G o H: (i,j)~(k,l) iff ik is an edge of G, or i=k and jl is an edge of H.
/// |E| = n|E(H)| + m^2|E(G)|.
inline ProductResult lex_product(const Graph& g, const Graph& h) {
  const auto idx = detail::make_indexing(g, h);
  const int m = h.vertex_count();
  const auto g_edges = g.edges();
  const auto h_edges = h.edges();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.vertex_count()) * h_edges.size() +
                static_cast<std::size_t>(m) * static_cast<std::size_t>(m) *
                    g_edges.size());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (const auto& [j, l] : h_edges)
      edges.emplace_back(i * m + j, i * m + l);
  for (const auto& [i, k] : g_edges)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) edges.emplace_back(i * m + j, k * m + l);
  return ProductResult{Graph(idx.vertex_count(), edges), idx};
}

/// Lifts the Cartesian set a x b into the product under idx; size |a|*|b|.
inline VertexSet lift_set(const ProductIndexing& idx, const VertexSet& a,
                          const VertexSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("lift_set: factor sets must be nonempty");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.size()) *
              static_cast<std::size_t>(b.size()));
  for (int i : a)
    for (int j : b) out.push_back(idx.flatten(i, j));
  return VertexSet(std::move(out));
}

}  // namespace comfteam
