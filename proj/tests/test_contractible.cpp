#include <doctest.h>

#include <random>
#include <sstream>

#include "ctgraph/contractible.hpp"
#include "ctgraph/errors.hpp"
#include "test_support.hpp"

using namespace ctgraph;
using namespace ctgraph::testing;

namespace {

// Independent oracle: some deletion order reaches K(1), every deleted vertex
// having a link that itself passes. No memo, no canonical forms.
bool some_order_reduces(const Graph& g) {
  if (g.order() == 0) return false;
  if (g.order() == 1) return true;
  for (int v : g.vertex_set())
    if (some_order_reduces(neighborhood(g, v)) && some_order_reduces(delete_vertex(g, v))) return true;
  return false;
}

ReductionTrace vertex_trace(std::initializer_list<int> vs) {
  ReductionTrace t;
  for (int v : vs) t.steps.push_back(ReductionStep::vertex(v));
  return t;
}

}  // namespace

TEST_CASE("strong contractibility examples") {
  CHECK(is_strong_contractible(Graph::complete(1)));
  CHECK_FALSE(is_strong_contractible(Graph{}));
  CHECK_FALSE(is_strong_contractible(Graph::cycle(4)));
  CHECK_FALSE(some_order_reduces(Graph::cycle(4)));
  for (int n = 2; n <= 6; ++n) {
    CHECK(is_strong_contractible(Graph::complete(n)));
    CHECK(some_order_reduces(Graph::complete(n)));
  }
  CHECK(is_strong_contractible(octahedron_plus_edge()));
  CHECK(some_order_reduces(octahedron_plus_edge()));
  CHECK_FALSE(is_strong_contractible(octahedron()));
  CHECK_FALSE(is_strong_contractible(Graph::edgeless(2)));
  CHECK(is_strong_contractible(Graph::path(5)));
}

TEST_CASE("greedy, exhaustive and naive testers agree on random graphs") {
  std::mt19937_64 rng(2024);
  ContractibilityTester plain(ContractibilityTester::Options{.memoize = false});
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 1 + trial % 8, 0.3 + 0.4 * (trial % 5) / 4.0);
    const bool greedy = is_strong_contractible(g);
    CHECK(greedy == plain(g));
    CHECK(greedy == exhaustive_tester()(g));
    if (g.order() <= 6) CHECK(greedy == some_order_reduces(g));
  }
}

TEST_CASE("memoization is transparent and bounded") {
  std::mt19937_64 rng(7);
  ContractibilityTester tiny(ContractibilityTester::Options{.memoize = true, .cache_capacity = 4});
  ContractibilityTester none(ContractibilityTester::Options{.memoize = false});
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_connected_graph(rng, 3, 9, 0.3, 0.8);
    CHECK(tiny(g) == none(g));
    CHECK(tiny.cache_size() <= 4);
  }
}

TEST_CASE("contractible reduction") {
  auto k4 = contractible_reduction(Graph::complete(4));
  CHECK(k4.graph.order() == 1);
  CHECK(k4.trace == with_links(Graph::complete(4), vertex_trace({0, 1, 2})));

  auto c4 = contractible_reduction(Graph::cycle(4));
  CHECK(c4.graph == Graph::cycle(4));
  CHECK(c4.trace.empty());

  auto g = contractible_reduction(octahedron_plus_edge());
  CHECK(g.graph.vertices() == std::vector<int>{F});
  CHECK(g.trace == with_links(octahedron_plus_edge(), vertex_trace({A, B, C, D, E})));
  CHECK(g.trace.steps[0].link == std::vector<int>{B, D, E, F});
  CHECK(replay(octahedron_plus_edge(), g.trace) == g.graph);
}

TEST_CASE("reduction invariants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_connected_graph(rng, 1, 9, 0.3, 0.7);
    auto r = contractible_reduction(g);
    // Deterministic and replayable.
    CHECK(contractible_reduction(g).trace == r.trace);
    CHECK(replay(g, r.trace) == r.graph);
    // Maximal: nothing left to delete.
    for (int v : r.graph.vertex_set()) CHECK_FALSE(is_strong_contractible(neighborhood(r.graph, v)));
    // Every recorded link passed at its step.
    Graph cur = g;
    for (const auto& s : r.trace.steps) {
      CHECK(s.link == cur.adjacent(s.u).to_vector());
      CHECK(is_strong_contractible(cur.induced(VertexSet::of(s.link))));
      cur = delete_vertex(cur, s.u);
    }
    // Greedy order succeeds on every strongly contractible graph.
    if (is_strong_contractible(g)) CHECK(r.graph.order() == 1);

    auto e = edge_extended_reduction(g);
    CHECK(replay(g, e.trace) == e.graph);
    CHECK(e.graph.order() <= r.graph.order());
    CHECK(e.graph.size() <= r.graph.size());
  }
}

TEST_CASE("edge extended reduction basics") {
  auto k4 = edge_extended_reduction(Graph::complete(4));
  CHECK(k4.graph.order() == 1);
  for (const auto& s : k4.trace.steps) CHECK(s.is_vertex());

  auto c4 = edge_extended_reduction(Graph::cycle(4));
  CHECK(c4.graph == Graph::cycle(4));
  CHECK(c4.trace.empty());

  // A 5-cycle 0-4-3-1-5 plus vertex 2 on {3, 4, 5}: no vertex link passes,
  // but edge 2-3 has common neighborhood {4}.
  auto g = Graph::from_edges(6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}});
  CHECK(contractible_reduction(g).trace.empty());
  auto e = edge_extended_reduction(g);
  CHECK(e.trace.steps.size() == 1);
  CHECK(e.trace.steps[0] == with_links(g, ReductionTrace{{ReductionStep::edge(Edge(2, 3))}}).steps[0]);
  CHECK(e.graph == delete_edge(g, Edge(2, 3)));
}

TEST_CASE("legal transformations") {
  using Kind = Transformation::Kind;
  auto k2 = legal_transformations(Graph::complete(2));
  CHECK(std::count(k2.begin(), k2.end(), Transformation{Kind::DeleteVertex, 0, {}, {}}) == 1);
  CHECK(std::count(k2.begin(), k2.end(), Transformation{Kind::DeleteVertex, 1, {}, {}}) == 1);

  auto c4 = legal_transformations(Graph::cycle(4));
  for (const auto& t : c4) {
    CHECK(t.kind == Kind::GlueVertex);  // no vertex or edge qualifies, no chord qualifies
  }

  auto k1 = legal_transformations(Graph::complete(1));
  CHECK(std::count(k1.begin(), k1.end(), Transformation{Kind::GlueVertex, 1, {}, VertexSet{0}}) == 1);

  // Every reported move satisfies its side condition.
  auto g = octahedron_plus_edge();
  for (const auto& t : legal_transformations(g, 2)) {
    switch (t.kind) {
      case Kind::DeleteVertex: CHECK(is_strong_contractible(neighborhood(g, t.vertex))); break;
      case Kind::GlueVertex:
        CHECK(is_strong_contractible(g.induced(t.neighbors)));
        CHECK(t.neighbors.size() <= 2);
        CHECK_FALSE(g.has_vertex(t.vertex));
        break;
      case Kind::DeleteEdge:
        CHECK(g.has_edge(t.edge.u, t.edge.v));
        CHECK(is_strong_contractible(common_neighborhood(g, t.edge.u, t.edge.v)));
        break;
      case Kind::GlueEdge:
        CHECK_FALSE(g.has_edge(t.edge.u, t.edge.v));
        CHECK(is_strong_contractible(common_neighborhood(g, t.edge.u, t.edge.v)));
        break;
    }
  }
  CHECK(to_string(Kind::DeleteEdge) == "I3");
}

TEST_CASE("trace text format") {
  ReductionTrace t = vertex_trace({3, 1});
  t.steps.push_back(ReductionStep::edge(Edge(4, 2)));
  std::ostringstream out;
  write_trace(out, t);
  CHECK(out.str() == "trace 3\nV 3\nV 1\nE 2 4\n");
  std::istringstream in(out.str());
  CHECK(parse_trace(in) == t);

  std::istringstream bad_header("V 1\n");
  CHECK_THROWS_AS(parse_trace(bad_header), ParseError);
  std::istringstream bad_count("trace 2\nV 1\n");
  CHECK_THROWS_AS(parse_trace(bad_count), ParseError);
  std::istringstream bad_step("trace 1\nX 1\n");
  try {
    parse_trace(bad_step);
    FAIL("accepted bad step");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(replay(Graph::cycle(4), vertex_trace({9})), std::invalid_argument);
}
