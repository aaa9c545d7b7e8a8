#pragma once

// Domination predicates and exact minimum (connected) dominating set search.
// Minimality is by construction: sizes are tried ascending and within one
// size candidates arrive in lexicographic order of their sorted member
// lists, so the first hit is the canonical witness.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comfteam/graph.hpp"

namespace comfteam {

// Default hard cap for the exact solvers; exponential beyond desk scale.
inline constexpr int kDefaultSearchCap = 16;

/// True iff s together with its neighborhood covers every vertex.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (v >= g.vertex_count())
      throw std::invalid_argument("is_dominating: vertex id " +
                                  std::to_string(v) + " out of range");
  const int n = g.vertex_count();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  int count = 0;
  auto mark = [&](int v) {
    if (!covered[static_cast<std::size_t>(v)]) {
      covered[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  };
  for (int v : s) {
    mark(v);
    for (int w : g.neighbors(v)) mark(w);
  }
  return count == n;
}

namespace detail {

// Connected-subset enumeration anchored at its minimum vertex: the current
// set grows only through neighbors of already-chosen vertices, and each
// candidate is excluded for the sibling branches after its own branch, so
// every subset appears exactly once.
class ConnectedSubsetEnumerator {
 public:
  ConnectedSubsetEnumerator(const Graph& g, int target_size)
      : g_(g),
        target_(target_size),
        in_set_(static_cast<std::size_t>(g.vertex_count()), 0),
        excluded_(static_cast<std::size_t>(g.vertex_count()), 0),
        frontier_mark_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  // All connected subsets of size target whose minimum vertex is anchor.
  void collect_from_anchor(int anchor, std::vector<std::vector<int>>& out) {
    for (int v = 0; v < anchor; ++v) excluded_[static_cast<std::size_t>(v)] = 1;
    current_.assign(1, anchor);
    in_set_[static_cast<std::size_t>(anchor)] = 1;
    std::vector<int> frontier;
    for (int w : g_.neighbors(anchor))
      if (w > anchor) frontier.push_back(w);
    grow(frontier, out);
    in_set_[static_cast<std::size_t>(anchor)] = 0;
    for (int v = 0; v < anchor; ++v) excluded_[static_cast<std::size_t>(v)] = 0;
  }

 private:
  void grow(const std::vector<int>& frontier,
            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current_.size()) == target_) {
      std::vector<int> sorted = current_;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    std::vector<int> local_excluded;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int v = frontier[i];
      current_.push_back(v);
      in_set_[static_cast<std::size_t>(v)] = 1;
      std::vector<int> child;
      child.reserve(frontier.size() + g_.neighbors(v).size());
      for (std::size_t j = i + 1; j < frontier.size(); ++j) {
        child.push_back(frontier[j]);
        frontier_mark_[static_cast<std::size_t>(frontier[j])] = 1;
      }
      for (int w : g_.neighbors(v))
        if (!in_set_[static_cast<std::size_t>(w)] &&
            !excluded_[static_cast<std::size_t>(w)] &&
            !frontier_mark_[static_cast<std::size_t>(w)])
          child.push_back(w);
      for (std::size_t j = i + 1; j < frontier.size(); ++j)
        frontier_mark_[static_cast<std::size_t>(frontier[j])] = 0;
      grow(child, out);
      current_.pop_back();
      in_set_[static_cast<std::size_t>(v)] = 0;
      excluded_[static_cast<std::size_t>(v)] = 1;
      local_excluded.push_back(v);
    }
    for (int v : local_excluded) excluded_[static_cast<std::size_t>(v)] = 0;
  }

  const Graph& g_;
  int target_;
  std::vector<char> in_set_, excluded_, frontier_mark_;
  std::vector<int> current_;
};

// Lexicographic k-combinations of {0..n-1}; visit returns false to stop.
template <class Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
  const std::vector<int>& view = combo;
  while (true) {
    if (!visit(view)) return false;
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// Streams every size-k vertex subset whose induced subgraph is connected,
/// exactly once, in lexicographic order of the sorted member lists.
/// The visitor returns false to stop early; the function returns false iff
/// it was stopped.
template <class Visit>
bool enumerate_connected_subsets(const Graph& g, int k, Visit&& visit) {
  const int n = g.vertex_count();
  if (k < 1 || k > n)
    throw std::invalid_argument("enumerate_connected_subsets: size " +
                                std::to_string(k) + " out of range [1," +
                                std::to_string(n) + "]");
  if (!is_connected(g))
    throw std::invalid_argument(
        "enumerate_connected_subsets: graph must be connected");
  detail::ConnectedSubsetEnumerator enumerator(g, k);
  std::vector<std::vector<int>> batch;
  for (int anchor = 0; anchor + k <= n; ++anchor) {
    batch.clear();
    enumerator.collect_from_anchor(anchor, batch);
    std::sort(batch.begin(), batch.end());
    for (auto& members : batch)
      if (!visit(VertexSet(std::move(members)))) return false;
  }
  return true;
}

/// Convenience collector for tests and small corpora.
inline std::vector<VertexSet> connected_subsets(const Graph& g, int k) {
  std::vector<VertexSet> out;
  enumerate_connected_subsets(g, k, [&](VertexSet s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

/// Exact gamma / gamma_c value with the witness attaining it.
struct DominationWitness {
  int size = 0;
  VertexSet witness;
  bool connected_required = false;
};

/// Size-bounded search: smallest (connected) dominating set of size at most
/// max_size, or nullopt when none exists in that range. Cost is bounded by
/// the subset counts at sizes <= max_size, so no vertex cap applies here.
inline std::optional<DominationWitness> find_dominating_set_up_to(
    const Graph& g, int max_size, bool require_connected) {
  const int n = g.vertex_count();
  if (max_size < 1) return std::nullopt;
  for (int k = 1; k <= std::min(max_size, n); ++k) {
    std::optional<VertexSet> found;
    if (require_connected) {
      enumerate_connected_subsets(g, k, [&](VertexSet s) {
        if (is_dominating(g, s)) {
          found = std::move(s);
          return false;
        }
        return true;
      });
    } else {
      detail::for_each_combination(n, k, [&](const std::vector<int>& combo) {
        VertexSet s(combo);
        if (is_dominating(g, s)) {
          found = std::move(s);
          return false;
        }
        return true;
      });
    }
    if (found)
      return DominationWitness{k, std::move(*found), require_connected};
  }
  return std::nullopt;
}

namespace detail {

inline void check_solver_input(const Graph& g, int max_vertices,
                               const char* what) {
  if (g.vertex_count() > max_vertices)
    throw std::invalid_argument(std::string(what) + ": vertex count " +
                                std::to_string(g.vertex_count()) +
                                " exceeds search cap " +
                                std::to_string(max_vertices));
  if (!is_connected(g))
    throw std::invalid_argument(std::string(what) +
                                ": graph must be connected");
}

}  // namespace detail

/// Exact domination number gamma(g) for connected g.
inline DominationWitness min_dominating_set(const Graph& g,
                                            int max_vertices = kDefaultSearchCap) {
  detail::check_solver_input(g, max_vertices, "min_dominating_set");
  return *find_dominating_set_up_to(g, g.vertex_count(), false);
}

/// Exact connected domination number gamma_c(g) for connected g.
inline DominationWitness min_connected_dominating_set(
    const Graph& g, int max_vertices = kDefaultSearchCap) {
  detail::check_solver_input(g, max_vertices, "min_connected_dominating_set");
  return *find_dominating_set_up_to(g, g.vertex_count(), true);
}

}  // namespace comfteam
