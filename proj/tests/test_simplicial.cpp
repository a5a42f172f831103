#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>
#include <sstream>

#include "ctgraph/errors.hpp"
#include "ctgraph/simplicial.hpp"
#include "test_support.hpp"

using namespace ctgraph;
using namespace ctgraph::testing;

namespace {

// Free pairs straight from the definition: every σ ⊊ τ with τ maximal and no
// other maximal face containing σ.
std::vector<FreePair> free_pairs_by_definition(const SimplicialComplex& c) {
  std::vector<Simplex> maximal;
  for (const auto& f : c.faces()) {
    bool is_max = true;
    for (const auto& g : c.faces())
      if (g != f && f.is_face_of(g)) is_max = false;
    if (is_max) maximal.push_back(f);
  }
  std::vector<FreePair> out;
  for (const auto& tau : maximal)
    for (const auto& sigma : c.faces()) {
      if (sigma == tau || !sigma.is_face_of(tau)) continue;
      bool alone = true;
      for (const auto& other : maximal)
        if (other != tau && sigma.is_face_of(other)) alone = false;
      if (alone) out.push_back({sigma, tau});
    }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex triangle() { return SimplicialComplex::from_maximal({Simplex{0, 1, 2}}); }

// The five collapses of the octahedron-plus-edge example.
std::vector<FreePair> example_collapses() {
  return {{{A, B, E}, {A, B, E, F}},
          {{A, E, F}, {A, D, E, F}},
          {{D, E, F}, {C, D, E, F}},
          {{C, E, F}, {B, C, E, F}},
          {{E, F}, {B, E, F}}};
}

}  // namespace

TEST_CASE("simplex basics") {
  Simplex s{3, 1, 2};
  CHECK(s.vertices() == std::vector<int>{1, 2, 3});
  CHECK(s.dimension() == 2);
  CHECK(Simplex{1, 3}.is_face_of(s));
  CHECK_FALSE(Simplex{0}.is_face_of(s));
  CHECK_THROWS_AS(Simplex(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS((Simplex{1, 1}), std::invalid_argument);
  CHECK(to_string(Simplex{A, B}, &static_cast<const Graph&>(octahedron_plus_edge())) == "{A,B}");
}

TEST_CASE("clique complex") {
  CHECK(clique_complex(Graph::complete(3)).size() == 7);
  auto c4 = clique_complex(Graph::cycle(4));
  CHECK(c4.size() == 8);
  CHECK(c4.dimension() == 1);
  auto g = clique_complex(octahedron_plus_edge());
  std::vector<Simplex> tetra;
  for (const auto& f : g.maximal_faces())
    if (f.dimension() == 3) tetra.push_back(f);
  CHECK(tetra == std::vector<Simplex>{{A, B, E, F}, {A, D, E, F}, {B, C, E, F}, {C, D, E, F}});
  CHECK(g.maximal_faces().size() == 4);
  CHECK(g.is_closed());
}

TEST_CASE("free pairs match the definition") {
  auto t = free_pairs(triangle());
  CHECK(std::count(t.begin(), t.end(), FreePair{{0}, {0, 1, 2}}) == 1);
  for (auto e : {Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}}) CHECK(std::count(t.begin(), t.end(), FreePair{e, {0, 1, 2}}) == 1);
  CHECK(t.size() == 6);

  CHECK(free_pairs(clique_complex(Graph::cycle(4))).empty());

  auto g = free_pairs(clique_complex(octahedron_plus_edge()));
  CHECK(std::count(g.begin(), g.end(), FreePair{{A, B, E}, {A, B, E, F}}) == 1);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = clique_complex(random_graph(rng, 1 + trial % 7, 0.6));
    auto got = free_pairs(c);
    CHECK(std::is_sorted(got.begin(), got.end(), [](const FreePair& a, const FreePair& b) {
      return std::tie(a.tau, a.sigma) < std::tie(b.tau, b.sigma);
    }));
    std::sort(got.begin(), got.end());
    CHECK(got == free_pairs_by_definition(c));
  }
}

TEST_CASE("collapse") {
  auto c = triangle().collapse({{0}, {0, 1, 2}});
  CHECK(c == SimplicialComplex::from_maximal({Simplex{1, 2}}));

  auto point = SimplicialComplex::from_maximal({Simplex{0}});
  CHECK(free_pairs(point).empty());
  CHECK_THROWS_AS(point.collapse({{0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(triangle().collapse({{0}, {0, 1}}), std::invalid_argument);

  auto delta = clique_complex(octahedron_plus_edge());
  for (const auto& pair : example_collapses()) {
    REQUIRE(is_free_pair(delta, pair));
    delta = delta.collapse(pair);
    CHECK(delta.is_closed());
  }
  auto skeleton = one_skeleton(delta);
  CHECK(skeleton == octahedron());
  CHECK_FALSE(is_strong_contractible(skeleton));
}

TEST_CASE("collapse removes exactly the interval between sigma and tau") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    auto c = clique_complex(random_graph(rng, 2 + trial % 6, 0.7));
    for (const auto& pair : free_pairs(c)) {
      auto after = c.collapse(pair);
      CHECK(after.is_closed());
      CHECK(c.size() - after.size() == (std::size_t{1} << (pair.tau.dimension() - pair.sigma.dimension())));
    }
  }
}

TEST_CASE("collapsibility search") {
  auto point = SimplicialComplex::from_maximal({Simplex{4}});
  auto r = is_collapsible(point);
  CHECK(r.verdict == CollapseResult::Verdict::Collapsible);
  CHECK(r.witness.empty());

  for (int n = 1; n <= 6; ++n) {
    auto k = clique_complex(Graph::complete(n));
    auto res = is_collapsible(k);
    REQUIRE(res.verdict == CollapseResult::Verdict::Collapsible);
    CHECK(collapse_sequence(k, res.witness).is_point());
    for (const auto& p : res.witness) CHECK(p.is_elementary());
  }
  CHECK(is_collapsible(clique_complex(Graph::cycle(4))).verdict == CollapseResult::Verdict::NotCollapsible);
  CHECK(is_collapsible(clique_complex(octahedron())).verdict == CollapseResult::Verdict::NotCollapsible);
  CHECK_THROWS_AS(is_collapsible(SimplicialComplex{}), std::invalid_argument);

  auto g = clique_complex(octahedron_plus_edge());
  auto res = is_collapsible(g);
  REQUIRE(res.verdict == CollapseResult::Verdict::Collapsible);
  CHECK(collapse_sequence(g, res.witness).is_point());
}

TEST_CASE("acyclic but not collapsible") {
  auto hat = clique_complex(dunce_hat());
  CHECK(hat.size() == 17 + 52 + 36);
  CHECK(betti_numbers_z2(hat) == std::vector<int>{1, 0, 0});
  CHECK(free_pairs(hat).empty());
  CHECK(is_collapsible(hat).verdict == CollapseResult::Verdict::NotCollapsible);
  CHECK_FALSE(is_strong_contractible(dunce_hat()));
}

TEST_CASE("search budget is reported, not coerced") {
  // Acyclic and collapsible, but a one-state budget cannot finish.
  auto r = is_collapsible(clique_complex(Graph::path(6)), 1);
  CHECK(r.verdict == CollapseResult::Verdict::Exhausted);
}

TEST_CASE("one skeleton") {
  CHECK(one_skeleton(triangle()) == Graph::complete(3));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, trial % 9, 0.5);
    CHECK(one_skeleton(clique_complex(g)) == g);
  }
}

TEST_CASE("trace-guided collapse") {
  auto g = octahedron_plus_edge();
  auto r = contractible_reduction(g);
  auto witness = collapse_via_trace(g, r.trace);
  auto end = collapse_sequence(clique_complex(g), witness);
  CHECK(end.is_point());
  for (const auto& p : witness) CHECK(p.is_elementary());

  std::mt19937_64 rng(77);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto h = random_connected_graph(rng, 1, 8, 0.4, 0.9);
    auto red = edge_extended_reduction(h);
    // Collapsing along any trace ends at the clique complex of the reduced graph.
    auto after = collapse_sequence(clique_complex(h), collapse_via_trace(h, red.trace));
    CHECK(after == clique_complex(red.graph));
    if (is_strong_contractible(h)) {
      ++positives;
      CHECK(after.is_point());
    }
  }
  CHECK(positives > 20);
  CHECK_THROWS_AS(collapse_via_trace(Graph::cycle(4), ReductionTrace{{ReductionStep::vertex(0)}}), std::invalid_argument);
}

TEST_CASE("complex text format") {
  std::ostringstream out;
  write_complex(out, clique_complex(octahedron_plus_edge()));
  CHECK(out.str() == "0 1 4 5\n0 3 4 5\n1 2 4 5\n2 3 4 5\n");
  std::istringstream in(out.str());
  CHECK(parse_complex(in) == clique_complex(octahedron_plus_edge()));
  std::istringstream bad("0 1\n2 x\n");
  CHECK_THROWS_AS(parse_complex(bad), ParseError);
}
