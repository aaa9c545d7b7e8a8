#include <doctest.h>

#include <algorithm>

#include "comfteam/generators.hpp"
#include "comfteam/graph.hpp"
#include "test_util.hpp"

using namespace comfteam;

TEST_CASE("graph construction enforces the invariants") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);

  const Graph g(3, {{2, 0}, {0, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("parse_graph accepts the documented format") {
  SUBCASE("smallest edge") {
    const Graph g = parse_graph("graph 2 1\n0 1\n");
    CHECK(g == Graph(2, {{0, 1}}));
  }
  SUBCASE("P6 with comments and blank lines") {
    const Graph g = parse_graph(
        "# a path\n\ngraph 6 5\n0 1\n1 2\n# interior\n2 3\n3 4\n4 5");
    CHECK(g == gen_path(6));
  }
  SUBCASE("disconnected graphs parse fine") {
    const Graph g = parse_graph("graph 4 2\n0 1\n2 3\n");
    CHECK(g == testutil::disjoint_edges_4());
  }
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("network 2 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 2 1\n0 0\n"), ParseError);      // self-loop
  CHECK_THROWS_AS(parse_graph("graph 2 1\n0 2\n"), ParseError);      // id >= n
  CHECK_THROWS_AS(parse_graph("graph 2 2\n0 1\n1 0\n"), ParseError); // duplicate
  CHECK_THROWS_AS(parse_graph("graph 2 2\n0 1\n"), ParseError);      // too few
  CHECK_THROWS_AS(parse_graph("graph 2 1\n0 1\n0 1\n"), ParseError); // too many
  CHECK_THROWS_AS(parse_graph("graph 3 1\n0 1 2\n"), ParseError);
}

TEST_CASE("serialize/parse round-trip") {
  const auto corpus = testutil::connected_upto(5);
  for (const auto& g : corpus) CHECK(parse_graph(serialize_graph(g)) == g);
  for (const auto& g : testutil::seeded_random_graphs(25, 2, 12, 0.4, 99))
    CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK(serialize_graph(Graph(2, {{1, 0}})) == "graph 2 1\n0 1\n");
  CHECK(serialize_graph(Graph(1), "product lex n=1 m=1") ==
        "# product lex n=1 m=1\ngraph 1 0\n");
}

TEST_CASE("distances_from matches BFS semantics") {
  CHECK(distances_from(gen_path(6), 0) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(distances_from(gen_cycle(5), 0) == std::vector<int>{0, 1, 2, 2, 1});
  CHECK(distances_from(testutil::disjoint_edges_4(), 0) ==
        std::vector<int>{0, 1, kInfiniteDistance, kInfiniteDistance});
  CHECK_THROWS_AS(distances_from(gen_path(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(distances_from(gen_path(3), -1), std::invalid_argument);
}

TEST_CASE("distances agree with the Floyd-Warshall oracle and are symmetric") {
  auto graphs = testutil::connected_upto(5);
  auto randoms = testutil::seeded_random_graphs(20, 3, 10, 0.35, 7);
  graphs.insert(graphs.end(), randoms.begin(), randoms.end());
  graphs.push_back(testutil::disjoint_edges_4());
  for (const auto& g : graphs) {
    const auto oracle = testutil::floyd_warshall(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto dist = distances_from(g, v);
      CHECK(dist == oracle[static_cast<std::size_t>(v)]);
      for (int u = 0; u < g.vertex_count(); ++u)
        CHECK(dist[static_cast<std::size_t>(u)] ==
              oracle[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("eccentricity profiles of the reference graphs") {
  SUBCASE("P6") {
    const auto p = eccentricity_profile(gen_path(6));
    CHECK(p.ecc == std::vector<int>{5, 4, 3, 3, 4, 5});
    CHECK(p.radius == 3);
    CHECK(p.diameter == 5);
    CHECK_FALSE(p.self_centered);
  }
  SUBCASE("K3") {
    const auto p = eccentricity_profile(gen_complete(3));
    CHECK(p.ecc == std::vector<int>{1, 1, 1});
    CHECK(p.radius == 1);
    CHECK(p.diameter == 1);
    CHECK(p.self_centered);
  }
  SUBCASE("C5 via the all-pairs oracle") {
    const Graph c5 = gen_cycle(5);
    const auto oracle = testutil::floyd_warshall(c5);
    std::vector<int> expected;
    for (const auto& row : oracle)
      expected.push_back(*std::max_element(row.begin(), row.end()));
    CHECK(expected == std::vector<int>{2, 2, 2, 2, 2});
    const auto p = eccentricity_profile(c5);
    CHECK(p.ecc == expected);
    CHECK(p.self_centered);
  }
  SUBCASE("K1 is trivially self-centered") {
    const auto p = eccentricity_profile(Graph(1));
    CHECK(p.ecc == std::vector<int>{0});
    CHECK(p.radius == 0);
    CHECK(p.self_centered);
  }
  SUBCASE("disconnected means everything infinite") {
    const auto p = eccentricity_profile(testutil::disjoint_edges_4());
    for (int e : p.ecc) CHECK(e == kInfiniteDistance);
    CHECK(p.radius == kInfiniteDistance);
    CHECK(p.diameter == kInfiniteDistance);
    CHECK_FALSE(p.self_centered);
  }
}

TEST_CASE("metric invariants over the corpus") {
  auto graphs = testutil::connected_upto(5);
  auto randoms = testutil::seeded_random_graphs(20, 2, 12, 0.5, 11);
  graphs.insert(graphs.end(), randoms.begin(), randoms.end());
  for (const auto& g : graphs) {
    const int n = g.vertex_count();
    const auto p = eccentricity_profile(g);
    CHECK(p.radius <= p.diameter);
    if (n >= 2) {
      CHECK(p.diameter <= 2 * p.radius);
      for (int e : p.ecc) {
        CHECK(e >= 1);
        CHECK(e <= n - 1);
      }
    }
  }
}

TEST_CASE("induced subgraphs") {
  const Graph p6 = gen_path(6);
  SUBCASE("interior of P6 is P4") {
    const auto sub = induced_subgraph(p6, VertexSet({1, 2, 3, 4}));
    CHECK(sub.graph == gen_path(4));
    CHECK(sub.original_ids == std::vector<int>{1, 2, 3, 4});
    CHECK(sub.mapped(3) == 2);
    CHECK(sub.mapped(0) == -1);
  }
  SUBCASE("non-adjacent pair of C5 is edgeless") {
    const auto sub = induced_subgraph(gen_cycle(5), VertexSet({0, 2}));
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 0);
  }
  SUBCASE("full vertex set reproduces the graph") {
    for (const auto& g : testutil::connected_upto(4)) {
      std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
      for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
      const auto sub = induced_subgraph(g, VertexSet(all));
      CHECK(sub.graph == g);
    }
  }
  SUBCASE("empty set rejected") {
    CHECK_THROWS_AS(induced_subgraph(p6, VertexSet{}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(p6, VertexSet({6})), std::invalid_argument);
  }
}

TEST_CASE("induced distances never shrink") {
  for (const auto& g : testutil::connected_upto(4)) {
    const int n = g.vertex_count();
    for (const auto& s : testutil::all_nonempty_subsets(n)) {
      const auto sub = induced_subgraph(g, s);
      for (int a = 0; a < sub.graph.vertex_count(); ++a) {
        const auto sub_dist = distances_from(sub.graph, a);
        const auto full_dist = distances_from(g, sub.original_ids[static_cast<std::size_t>(a)]);
        for (int b = 0; b < sub.graph.vertex_count(); ++b)
          CHECK(sub_dist[static_cast<std::size_t>(b)] >=
                full_dist[static_cast<std::size_t>(sub.original_ids[static_cast<std::size_t>(b)])]);
      }
    }
  }
}

TEST_CASE("connectivity predicates") {
  CHECK(is_connected(gen_path(6)));
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(testutil::disjoint_edges_4()));

  const Graph c5 = gen_cycle(5);
  CHECK(is_connected_set(c5, VertexSet({0, 1})));
  CHECK_FALSE(is_connected_set(c5, VertexSet({0, 2})));
  CHECK(is_connected_set(c5, VertexSet({3})));
  CHECK_THROWS_AS(is_connected_set(c5, VertexSet{}), std::invalid_argument);
}

TEST_CASE("eccentricities_within matches the induced-subgraph profile") {
  for (const auto& g : testutil::connected_upto(4)) {
    for (const auto& s : testutil::all_nonempty_subsets(g.vertex_count())) {
      const auto fast = eccentricities_within(g, s);
      const auto profile = eccentricity_profile(induced_subgraph(g, s).graph);
      CHECK(fast == profile.ecc);
    }
  }
}

TEST_CASE("vertex sets") {
  const VertexSet s({3, 1, 2, 1});
  CHECK(s.members() == std::vector<int>{1, 2, 3});
  CHECK(s.to_string() == "{1,2,3}");
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK(VertexSet::parse_csv("3,1,2") == s);
  CHECK(VertexSet({0, 3}) < VertexSet({1, 2}));
  CHECK(VertexSet({0}) < VertexSet({0, 1}));
  CHECK_THROWS_AS(VertexSet::parse_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet::parse_csv("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet::parse_csv("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet({-1}), std::invalid_argument);
}
