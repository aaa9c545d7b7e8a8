#pragma once

// Core graph machinery: simple undirected graphs over dense 0-based vertex
// ids, BFS distances, eccentricity profiles, induced subgraphs, connectivity,
// and the line-oriented edge-list text format.

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace comfteam {

// Distance / eccentricity value for unreachable vertices. Strict comparisons
// against it fail naturally, so a disconnected team can never look "closer".
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

inline bool is_finite_distance(int d) { return d != kInfiniteDistance; }

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Simple undirected graph: no self-loops, no multi-edges, n >= 1.
/// Immutable after construction; adjacency lists are kept sorted.
class Graph {
 public:
  explicit Graph(int n) : n_(n), m_(0) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// All edges as (min,max) pairs, sorted ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[static_cast<std::size_t>(v)])
        if (w > v) out.emplace_back(v, w);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex id " + std::to_string(v) +
                                  " out of range [0," + std::to_string(n_) + ")");
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& list = adj_[static_cast<std::size_t>(u)];
    if (std::find(list.begin(), list.end(), v) != list.end())
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    list.push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++m_;
  }

  int n_;
  int m_;
  std::vector<std::vector<int>> adj_;
};

/// Subset of vertex ids of some graph; members kept sorted and unique.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    for (int v : members_)
      if (v < 0)
        throw std::invalid_argument("negative vertex id in set: " +
                                    std::to_string(v));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  static VertexSet single(int v) { return VertexSet(std::vector<int>{v}); }

  /// Parses a comma-separated id list, e.g. "1,2,3".
  static VertexSet parse_csv(std::string_view text) {
    std::vector<int> ids;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string token(text.substr(pos, comma - pos));
      if (token.empty()) throw std::invalid_argument("empty entry in vertex list");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex id '" + token + "'");
      }
      if (used != token.size())
        throw std::invalid_argument("bad vertex id '" + token + "'");
      ids.push_back(v);
      pos = comma + 1;
      if (comma == text.size()) break;
    }
    if (ids.empty()) throw std::invalid_argument("empty vertex list");
    return VertexSet(std::move(ids));
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(members_[i]);
    }
    out += '}';
    return out;
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic order of the sorted member lists.
  bool operator<(const VertexSet& other) const {
    return members_ < other.members_;
  }

 private:
  std::vector<int> members_;
};

namespace detail {

inline void check_set_in_graph(const Graph& g, const VertexSet& s,
                               const char* what) {
  if (s.empty())
    throw std::invalid_argument(std::string(what) + ": set must be nonempty");
  for (int v : s)
    if (v >= g.vertex_count())
      throw std::invalid_argument(std::string(what) + ": vertex id " +
                                  std::to_string(v) + " out of range [0," +
                                  std::to_string(g.vertex_count()) + ")");
}

}  // namespace detail

/// BFS distances from one vertex; kInfiniteDistance marks unreachable.
inline std::vector<int> distances_from(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("source vertex " + std::to_string(source) +
                                " out of range [0," + std::to_string(n) + ")");
  std::vector<int> dist(static_cast<std::size_t>(n), kInfiniteDistance);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] == kInfiniteDistance) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Per-vertex eccentricities plus radius/diameter. All entries are
/// kInfiniteDistance when the graph is disconnected.
struct EccentricityProfile {
  std::vector<int> ecc;
  int radius = kInfiniteDistance;
  int diameter = kInfiniteDistance;
  bool self_centered = false;
};

inline EccentricityProfile eccentricity_profile(const Graph& g) {
  const int n = g.vertex_count();
  EccentricityProfile profile;
  profile.ecc.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto dist = distances_from(g, v);
    int e = 0;
    for (int d : dist) {
      if (d == kInfiniteDistance) {
        e = kInfiniteDistance;
        break;
      }
      e = std::max(e, d);
    }
    profile.ecc[static_cast<std::size_t>(v)] = e;
  }
  profile.radius = *std::min_element(profile.ecc.begin(), profile.ecc.end());
  profile.diameter = *std::max_element(profile.ecc.begin(), profile.ecc.end());
  profile.self_centered = is_finite_distance(profile.radius) &&
                          profile.radius == profile.diameter;
  return profile;
}

inline bool is_connected(const Graph& g) {
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), is_finite_distance);
}

/// True iff the subgraph induced by s is connected (s nonempty).
inline bool is_connected_set(const Graph& g, const VertexSet& s) {
  detail::check_set_in_graph(g, s, "is_connected_set");
  std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in_set[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> queue{s.members().front()};
  seen[static_cast<std::size_t>(queue.front())] = 1;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.neighbors(queue[head])) {
      if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == static_cast<std::size_t>(s.size());
}

/// Eccentricity of each member inside the induced subgraph <s>, aligned with
/// s.members(). kInfiniteDistance when <s> is disconnected.
inline std::vector<int> eccentricities_within(const Graph& g,
                                              const VertexSet& s) {
  detail::check_set_in_graph(g, s, "eccentricities_within");
  const auto& mem = s.members();
  const int k = s.size();
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(mem[static_cast<std::size_t>(i)])] = i;
  std::vector<int> result(static_cast<std::size_t>(k));
  std::vector<int> dist(static_cast<std::size_t>(k));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(k));
  for (int src = 0; src < k; ++src) {
    std::fill(dist.begin(), dist.end(), kInfiniteDistance);
    queue.clear();
    dist[static_cast<std::size_t>(src)] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int cur = queue[head];
      for (int w : g.neighbors(mem[static_cast<std::size_t>(cur)])) {
        int p = pos[static_cast<std::size_t>(w)];
        if (p >= 0 && dist[static_cast<std::size_t>(p)] == kInfiniteDistance) {
          dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(cur)] + 1;
          queue.push_back(p);
        }
      }
    }
    int e = 0;
    for (int d : dist) {
      if (d == kInfiniteDistance) {
        e = kInfiniteDistance;
        break;
      }
      e = std::max(e, d);
    }
    result[static_cast<std::size_t>(src)] = e;
  }
  return result;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;  // new id -> original id, ascending

  /// Original id -> new id; -1 when the vertex is not in the subgraph.
  int mapped(int original_id) const {
    auto it = std::lower_bound(original_ids.begin(), original_ids.end(),
                               original_id);
    if (it == original_ids.end() || *it != original_id) return -1;
    return static_cast<int>(it - original_ids.begin());
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  detail::check_set_in_graph(g, s, "induced_subgraph");
  const auto& mem = s.members();
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < mem.size(); ++i)
    pos[static_cast<std::size_t>(mem[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (int w : g.neighbors(mem[i]))
      if (w > mem[i] && pos[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(static_cast<int>(i), pos[static_cast<std::size_t>(w)]);
  return InducedSubgraph{Graph(s.size(), edges), mem};
}

namespace detail {

inline int parse_int_token(const std::string& token, std::size_t line_no,
                           const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + token + "'");
  }
  if (used != token.size() || value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max())
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + token + "'");
  return static_cast<int>(value);
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace detail

/// Parses the edge-list format: a `graph <n> <m>` header, then exactly m
/// lines `<u> <v>`. Lines starting with '#' and blank lines are skipped.
/// Rejects self-loops, duplicate edges and out-of-range ids.
inline Graph parse_graph(std::string_view text) {
  constexpr int kMaxVertices = 10'000'000;
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    const bool last = eol == text.size();
    pos = eol + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (last) break;
      continue;
    }
    auto tokens = detail::split_ws(line);
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "graph")
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'graph <n> <m>'");
      n = detail::parse_int_token(tokens[1], line_no, "vertex count");
      m = detail::parse_int_token(tokens[2], line_no, "edge count");
      if (n < 1 || n > kMaxVertices)
        throw ParseError("line " + std::to_string(line_no) +
                         ": vertex count must be in [1," +
                         std::to_string(kMaxVertices) + "]");
      if (m < 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge count must be non-negative");
      have_header = true;
    } else {
      if (static_cast<int>(edges.size()) == m)
        throw ParseError("line " + std::to_string(line_no) +
                         ": unexpected content after " + std::to_string(m) +
                         " edges");
      if (tokens.size() != 2)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected edge line '<u> <v>'");
      int u = detail::parse_int_token(tokens[0], line_no, "vertex id");
      int v = detail::parse_int_token(tokens[1], line_no, "vertex id");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range [0," +
                         std::to_string(n) + ")");
      if (u == v)
        throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                         std::to_string(u));
      auto key = std::minmax(u, v);
      if (!seen.insert(std::pair<int, int>(key.first, key.second)).second)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                         std::to_string(key.first) + " " + std::to_string(key.second));
      edges.emplace_back(u, v);
    }
    if (last) break;
  }
  if (!have_header) throw ParseError("missing 'graph <n> <m>' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph(n, edges);
}

/// Serializes to the edge-list format, edges sorted by (min,max).
/// A nonempty comment is emitted first as a '#' line.
inline std::string serialize_graph(const Graph& g,
                                   const std::string& comment = "") {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace comfteam
