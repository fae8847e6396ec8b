#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "coxan/fixtures.hpp"
#include "coxan/graph.hpp"
#include "doctest.h"

using namespace coxan;

namespace {

// Brute-force maximal-clique oracle: test every vertex subset.
std::vector<std::vector<int>> cliques_by_subsets(const CoxeterGraph& g) {
  const int n = g.size();
  auto complete = [&](unsigned mask) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!complete(mask)) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w)
      if (!(mask >> w & 1) && complete(mask | (1u << w))) maximal = false;
    if (!maximal) continue;
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) c.push_back(v);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoxeterGraph random_graph(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  std::uniform_int_distribution<int> label(2, 6);
  std::bernoulli_distribution edge(0.5);
  int n = nv(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) edges.emplace_back(names[i], names[j], label(rng));
  return CoxeterGraph::create(std::move(names), edges);
}

}  // namespace

TEST_CASE("parsing the basic text format") {
  CoxeterGraph g = parse_graph("vertex a\nvertex b\nedge a b 3\n");
  CHECK(g.size() == 2);
  CHECK(g.label(0, 1) == 3);

  // omitted label means 2, comments are stripped
  CoxeterGraph h = parse_graph("# header\nvertex a\nvertex b\nedge a b # note\n");
  CHECK(h.label(0, 1) == 2);
}

TEST_CASE("parser error cases") {
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a b 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a c 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a b x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a a 2\n"), ParseError);
  CHECK_THROWS_AS(
      parse_graph("vertex a\nvertex b\nedge a b 3\nedge a b 4\n"), ParseError);
  // identical duplicate declarations are tolerated
  CHECK_NOTHROW(parse_graph("vertex a\nvertex b\nedge a b 3\nedge b a 3\n"));
  // line numbers are reported
  try {
    parse_graph("vertex a\nvertex b\nedge a b 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("JSON input format") {
  CoxeterGraph g = parse_json(
      R"({"vertices":["a","b","c"],"edges":[{"u":"a","v":"b","m":3},{"u":"b","v":"c"}]})");
  CHECK(g.size() == 3);
  CHECK(g.label(0, 1) == 3);
  CHECK(g.label(1, 2) == 2);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"vertices":["a","a"]})"), ParseError);
  CHECK_THROWS_AS(
      parse_json(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","m":1}]})"),
      ParseError);
}

TEST_CASE("the four-vertex single-edge example graph") {
  // v1, v2 isolated; one unlabeled edge {v3, v4} which defaults to 2
  CoxeterGraph g = fixture_graph("sec21");
  CHECK(g.size() == 4);
  CHECK(g.label(g.index_of("v3"), g.index_of("v4")) == 2);
  CHECK(g.edge_count() == 1);

  SUBCASE("generated subgraph keeps internal edges") {
    CoxeterGraph s = induced_subgraph_by_names(g, {"v1", "v3", "v4"});
    CHECK(s.size() == 3);
    CHECK(s.edge_count() == 1);
    CHECK(s.label(s.index_of("v3"), s.index_of("v4")) == 2);
  }
  SUBCASE("empty and full subsets") {
    CHECK(induced_subgraph(g, {}).size() == 0);
    CHECK(induced_subgraph(g, {0, 1, 2, 3}) == g);
  }
  SUBCASE("maximal cliques are {v1}, {v2}, {v3,v4}") {
    auto cl = maximal_cliques(g);
    REQUIRE(cl.size() == 3);
    CHECK(cl[0].vertices == std::vector<int>{g.index_of("v1")});
    CHECK(cl[1].vertices == std::vector<int>{g.index_of("v2")});
    CHECK(cl[2].vertices ==
          std::vector<int>{g.index_of("v3"), g.index_of("v4")});
  }
}

TEST_CASE("round trip through the serializer is the identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    CoxeterGraph g = random_graph(rng, 7);
    std::string text = serialize_graph(g);
    CoxeterGraph h = parse_graph(text);
    CHECK(h == g);
    CHECK(serialize_graph(h) == text);
  }
}

TEST_CASE("maximal cliques against the subset oracle") {
  SUBCASE("4-cycle: the four edges") {
    CoxeterGraph g = parse_graph(
        "vertex v1\nvertex v2\nvertex v3\nvertex v4\n"
        "edge v1 v2 2\nedge v2 v3 2\nedge v3 v4 2\nedge v4 v1 2\n");
    auto expect = cliques_by_subsets(g);
    CHECK(expect.size() == 4);
    auto got = maximal_cliques(g);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].vertices == expect[i]);
  }
  SUBCASE("complete graph: one clique") {
    CoxeterGraph g = fixture_graph("gamma1");
    auto got = maximal_cliques(g);
    REQUIRE(got.size() == 1);
    CHECK(got[0].vertices == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("random graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
      CoxeterGraph g = random_graph(rng, 8);
      auto expect = cliques_by_subsets(g);
      auto got = maximal_cliques(g);
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].vertices == expect[i]);
        CHECK(got[i].maximal);
      }
    }
  }
}

TEST_CASE("predicates on the example graphs") {
  CoxeterGraph g1 = fixture_graph("gamma1");
  CHECK(is_complete(g1));
  CHECK_FALSE(is_triangle_free(g1));

  CoxeterGraph intro1 = fixture_graph("intro1");
  CHECK(is_even(intro1));
  CHECK(is_triangle_free(intro1));
  CHECK_FALSE(is_complete(intro1));

  CoxeterGraph edge3 = fixture_graph("i2_3");
  CHECK(all_labels_at_least_3(edge3));
  CHECK_FALSE(is_even(edge3));
  CHECK(is_complete(edge3));
}

TEST_CASE("even vertices") {
  // v1, v2 isolated (vacuously even); v3, v4 carry an odd label
  CoxeterGraph intro2 = fixture_graph("intro2");
  auto ev = even_vertices(intro2);
  CHECK(ev == std::vector<int>{intro2.index_of("v1"), intro2.index_of("v2")});

  CoxeterGraph evensq = fixture_graph("evensquare_infinite");
  CHECK(even_vertices(evensq).size() == 4);

  CHECK(even_vertices(fixture_graph("i2_3")).empty());
}

TEST_CASE("non-adjacent even pair") {
  CoxeterGraph intro1 = fixture_graph("intro1");
  auto p = non_adjacent_even_pair(intro1);
  REQUIRE(p.has_value());
  CHECK(intro1.name(p->first) == "v1");
  CHECK(intro1.name(p->second) == "v2");

  CHECK_FALSE(non_adjacent_even_pair(fixture_graph("gamma1")).has_value());

  CoxeterGraph sq = fixture_graph("square4");
  auto q = non_adjacent_even_pair(sq);
  REQUIRE(q.has_value());
  CHECK(sq.name(q->first) == "v1");
  CHECK(sq.name(q->second) == "v3");
}

TEST_CASE("non-adjacent even pair cross-checked by brute force") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    CoxeterGraph g = random_graph(rng, 7);
    auto p = non_adjacent_even_pair(g);
    // brute force over all pairs of even vertices
    auto evens = even_vertices(g);
    bool exists = false;
    std::pair<int, int> least{-1, -1};
    for (int u : evens)
      for (int v : evens)
        if (u < v && !g.adjacent(u, v) && !exists) {
          exists = true;
          least = {u, v};
        }
    CHECK(p.has_value() == exists);
    if (exists) CHECK(*p == least);
  }
}

TEST_CASE("induced subgraphs are full subgraphs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    CoxeterGraph g = random_graph(rng, 7);
    std::vector<int> s;
    for (int v = 0; v < g.size(); ++v)
      if (rng() % 2) s.push_back(v);
    CoxeterGraph sub = induced_subgraph(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        CHECK(sub.label(static_cast<int>(i), static_cast<int>(j)) ==
              g.label(s[i], s[j]));
  }
}

TEST_CASE("fixture corpus parses and matches the shipped files") {
  for (const Fixture& f : all_fixtures()) {
    CoxeterGraph g = parse_graph(f.cox_text);
    CHECK(g.size() >= 1);
    // the fixtures/ directory is generated from this table; guard drift
    std::ifstream shipped(std::string(COXAN_SOURCE_DIR) + "/fixtures/" + f.name +
                          ".cox");
    REQUIRE(shipped.good());
    std::ostringstream ss;
    ss << shipped.rdbuf();
    CHECK(ss.str() == f.cox_text);
  }
  CHECK_THROWS_AS(fixture("no-such-fixture"), ParseError);
}
