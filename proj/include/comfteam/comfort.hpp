#pragma once

// Comfortable-team analysis: a team <D> is comfortable when D dominates the
// graph, <D> is connected, and every member's eccentricity inside <D> is
// strictly below its eccentricity in the whole graph (less dispersive).
// Includes the exact gamma_comf search with certified non-existence, a plain
// powerset oracle, and the product-team constructions.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comfteam/domination.hpp"
#include "comfteam/graph.hpp"
#include "comfteam/products.hpp"

namespace comfteam {

struct MemberEccentricity {
  int vertex = 0;
  int graph_ecc = 0;
  int team_ecc = 0;  // kInfiniteDistance when <D> is disconnected
};

struct TeamDiagnosis {
  bool dominating = false;
  bool connected = false;
  bool less_dispersive = false;
  bool comfortable = false;
  std::vector<MemberEccentricity> per_member;
};

/// Either a minimum comfortable team with its size, or a non-existence
/// verdict. searched_through is the largest subset size exhaustively ruled
/// out (n when exists is false after a full search).
struct ComfortVerdict {
  bool exists = false;
  int size = 0;
  VertexSet team;
  int searched_through = 0;
};

namespace detail {

inline void check_comfort_input(const Graph& g, const VertexSet& s,
                                const char* what) {
  check_set_in_graph(g, s, what);
  if (!is_connected(g))
    throw std::invalid_argument(std::string(what) +
                                ": graph must be connected");
}

// Strict per-member comparison against precomputed whole-graph
// eccentricities. With detail == nullptr, stops at the first violation.
inline bool less_dispersive_check(const Graph& g,
                                  const std::vector<int>& graph_ecc,
                                  const VertexSet& s,
                                  std::vector<MemberEccentricity>* detail) {
  const auto team_ecc = eccentricities_within(g, s);
  const auto& mem = s.members();
  bool ok = true;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    const int e_graph = graph_ecc[static_cast<std::size_t>(mem[i])];
    const int e_team = team_ecc[i];
    if (detail) detail->push_back({mem[i], e_graph, e_team});
    if (!(e_team < e_graph)) {
      ok = false;
      if (!detail) return false;
    }
  }
  return ok;
}

inline void reject_trivial_graph(const Graph& g, const char* what) {
  if (g.vertex_count() == 1)
    throw std::invalid_argument(
        std::string(what) +
        ": trivial one-vertex graph has no team; 0 < 0 cannot hold");
}

}  // namespace detail

/// True iff every member of s sits strictly closer inside <s> than in g.
/// A disconnected <s> always fails (infinite team eccentricity).
inline bool is_less_dispersive(const Graph& g, const VertexSet& s) {
  detail::check_comfort_input(g, s, "is_less_dispersive");
  const auto profile = eccentricity_profile(g);
  return detail::less_dispersive_check(g, profile.ecc, s, nullptr);
}

/// Full diagnosis: the three defining predicates evaluated independently
/// plus per-member eccentricity pairs, so a failing team can be explained.
inline TeamDiagnosis diagnose_team(const Graph& g, const VertexSet& s) {
  detail::check_comfort_input(g, s, "diagnose_team");
  TeamDiagnosis d;
  d.dominating = is_dominating(g, s);
  d.connected = is_connected_set(g, s);
  const auto profile = eccentricity_profile(g);
  d.less_dispersive =
      detail::less_dispersive_check(g, profile.ecc, s, &d.per_member);
  d.comfortable = d.dominating && d.connected && d.less_dispersive;
  return d;
}

inline bool is_comfortable_team(const Graph& g, const VertexSet& s) {
  return diagnose_team(g, s).comfortable;
}

/// Size-bounded search over connected subsets, ascending size, lexicographic
/// within a size. The first hit is the canonical witness. When nothing is
/// found, exists=false with searched_through=max_size; that certifies only
/// the sizes actually enumerated.
inline ComfortVerdict search_comfortable_team(const Graph& g, int max_size) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "search_comfortable_team: graph must be connected");
  const int n = g.vertex_count();
  const int limit = std::min(max_size, n);
  const auto profile = eccentricity_profile(g);
  for (int k = 1; k <= limit; ++k) {
    std::optional<VertexSet> found;
    enumerate_connected_subsets(g, k, [&](VertexSet s) {
      if (is_dominating(g, s) &&
          detail::less_dispersive_check(g, profile.ecc, s, nullptr)) {
        found = std::move(s);
        return false;
      }
      return true;
    });
    if (found) return ComfortVerdict{true, k, std::move(*found), k - 1};
  }
  return ComfortVerdict{false, 0, VertexSet{}, limit};
}

/// Exact gamma_comf for connected g with 2 <= n <= max_vertices. Connected
/// subsets suffice: a disconnected <D> can never be less dispersive, so the
/// restriction loses nothing. Non-existence means every connected subset of
/// every size 1..n was ruled out.
inline ComfortVerdict min_comfortable_team(const Graph& g,
                                           int max_vertices = kDefaultSearchCap) {
  detail::reject_trivial_graph(g, "min_comfortable_team");
  detail::check_solver_input(g, max_vertices, "min_comfortable_team");
  return search_comfortable_team(g, g.vertex_count());
}

/// Independent oracle: plain powerset enumeration over all 2^n - 1 nonempty
/// subsets, filtered by the three predicates; minimum size wins, ties by
/// lexicographically smallest member list. n <= 12.
inline ComfortVerdict brute_force_gamma_comf(const Graph& g) {
  detail::reject_trivial_graph(g, "brute_force_gamma_comf");
  const int n = g.vertex_count();
  if (n > 12)
    throw std::invalid_argument("brute_force_gamma_comf: vertex count " +
                                std::to_string(n) + " exceeds 12");
  if (!is_connected(g))
    throw std::invalid_argument(
        "brute_force_gamma_comf: graph must be connected");
  const auto profile = eccentricity_profile(g);
  std::optional<VertexSet> best;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1UL << v)) members.push_back(v);
    VertexSet s(std::move(members));
    if (best && s.size() > best->size()) continue;
    if (!is_dominating(g, s) || !is_connected_set(g, s) ||
        !detail::less_dispersive_check(g, profile.ecc, s, nullptr))
      continue;
    if (!best || s.size() < best->size() ||
        (s.size() == best->size() && s < *best))
      best = std::move(s);
  }
  if (best) {
    const int size = best->size();
    return ComfortVerdict{true, size, std::move(*best), size - 1};
  }
  return ComfortVerdict{false, 0, VertexSet{}, n};
}

/// Lifts comfortable teams of both factors into the strong product; the
/// lifted Cartesian set is itself a comfortable team there, which the
/// function re-checks before returning.
inline VertexSet strong_team_construction(const Graph& g, const Graph& h,
                                          const VertexSet& s1,
                                          const VertexSet& s2,
                                          const ProductIndexing& idx) {
  if (!idx.matches(g, h))
    throw std::invalid_argument(
        "strong_team_construction: indexing does not match the factors");
  if (!diagnose_team(g, s1).comfortable)
    throw std::invalid_argument(
        "strong_team_construction: s1 is not a comfortable team of G");
  if (!diagnose_team(h, s2).comfortable)
    throw std::invalid_argument(
        "strong_team_construction: s2 is not a comfortable team of H");
  VertexSet lifted = lift_set(idx, s1, s2);
  const auto product = strong_product(g, h);
  if (!diagnose_team(product.graph, lifted).comfortable)
    throw std::logic_error(
        "strong_team_construction: lifted set " + idx.describe_set(lifted) +
        " is not a comfortable team of the strong product; this is a "
        "counterexample to the product-team law");
  return lifted;
}

/// Places a comfortable team of G into one fiber of the lexicographic
/// product G o H. Requires radius(G) >= 2: with radius 1 the fiber copy
/// keeps its eccentricity and the construction breaks down (use
/// lex_radius_fast_paths instead). Re-checked before returning.
inline VertexSet lex_team_construction(const Graph& g, const Graph& h,
                                       const VertexSet& s, int fiber,
                                       const ProductIndexing& idx) {
  if (!idx.matches(g, h))
    throw std::invalid_argument(
        "lex_team_construction: indexing does not match the factors");
  if (fiber < 0 || fiber >= h.vertex_count())
    throw std::invalid_argument("lex_team_construction: fiber " +
                                std::to_string(fiber) + " out of range");
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument(
        "lex_team_construction: factors must be connected");
  const auto profile = eccentricity_profile(g);
  if (profile.radius < 2)
    throw std::invalid_argument(
        "lex_team_construction: radius(G) must be at least 2, got " +
        std::to_string(profile.radius));
  if (!diagnose_team(g, s).comfortable)
    throw std::invalid_argument(
        "lex_team_construction: s is not a comfortable team of G");
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(s.size()));
  for (int i : s) members.push_back(idx.flatten(i, fiber));
  VertexSet lifted(std::move(members));
  const auto product = lex_product(g, h);
  if (!diagnose_team(product.graph, lifted).comfortable)
    throw std::logic_error(
        "lex_team_construction: fiber set " + idx.describe_set(lifted) +
        " is not a comfortable team of the lexicographic product; this is a "
        "counterexample to the fiber-team law");
  return lifted;
}

/// Radius-1 shortcuts for the lexicographic product:
///   radius(G)=1 and radius(H)=1  -> gamma_comf(G o H) = 1;
///   radius(G)=1 and radius(H)>=2 -> the product is 2-self-centered and
///                                   gamma_comf(G o H) = 2.
/// Returns nullopt when neither applies (including the degenerate H = K1,
/// where G o H is just G). Witnesses are re-checked before returning.
inline std::optional<ComfortVerdict> lex_radius_fast_paths(const Graph& g,
                                                           const Graph& h) {
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument(
        "lex_radius_fast_paths: factors must be connected");
  if (g.vertex_count() * h.vertex_count() < 2)
    throw std::invalid_argument(
        "lex_radius_fast_paths: product must have at least two vertices");
  const auto profile_g = eccentricity_profile(g);
  const auto profile_h = eccentricity_profile(h);
  if (profile_g.radius != 1) return std::nullopt;
  auto first_center = [](const Graph& graph, const EccentricityProfile& p) {
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (p.ecc[static_cast<std::size_t>(v)] == 1) return v;
    throw std::logic_error("radius-1 graph without a universal vertex");
  };
  const int c = first_center(g, profile_g);
  const auto product = lex_product(g, h);
  if (profile_h.radius == 1) {
    const int x = first_center(h, profile_h);
    VertexSet team = VertexSet::single(product.indexing.flatten(c, x));
    if (!diagnose_team(product.graph, team).comfortable)
      throw std::logic_error(
          "lex_radius_fast_paths: center pair is not a singleton team");
    return ComfortVerdict{true, 1, std::move(team), 0};
  }
  if (profile_h.radius >= 2) {
    // No universal vertex can exist in a 2-self-centered product, so size 1
    // is ruled out by scanning the singletons.
    for (int v = 0; v < product.graph.vertex_count(); ++v)
      if (product.graph.degree(v) == product.graph.vertex_count() - 1)
        throw std::logic_error(
            "lex_radius_fast_paths: unexpected universal vertex " +
            product.indexing.pair_string(v));
    const int w = g.neighbors(c).front();
    VertexSet team(std::vector<int>{product.indexing.flatten(c, 0),
                                    product.indexing.flatten(w, 0)});
    if (!diagnose_team(product.graph, team).comfortable)
      throw std::logic_error(
          "lex_radius_fast_paths: adjacent pair is not a comfortable team");
    return ComfortVerdict{true, 2, std::move(team), 1};
  }
  return std::nullopt;  // radius(H) = 0: H = K1, G o H is just G
}

}  // namespace comfteam
