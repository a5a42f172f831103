#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "ctgraph/enumeration.hpp"
#include "ctgraph/errors.hpp"
#include "test_support.hpp"

using namespace ctgraph;
using namespace ctgraph::testing;

namespace {

// Connected graphs on n labeled vertices, one code per isomorphism class.
std::set<std::uint64_t> brute_force_classes(int n) {
  std::set<std::uint64_t> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) out.insert(brute_force_code(g));
  }
  return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ctgraph_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("census counts match brute force") {
  auto census = generate_connected(6);
  CHECK(census.counts() == std::vector<std::size_t>{1, 1, 2, 6, 21, 112});
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const auto& e : census.layers.at(n)) {
      Graph g = e.form.decode();
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CHECK(canonical_form(g) == e.form);
      codes.insert(brute_force_code(g));
    }
    CHECK(codes.size() == census.layers.at(n).size());
    CHECK(codes == brute_force_classes(n));
  }
  CHECK(generate_connected(1).counts() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(generate_connected(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_connected(10), std::invalid_argument);
}

TEST_CASE("census at seven vertices") {
  auto census = generate_connected(7, {.jobs = 2});
  CHECK(census.counts().back() == 853);
  std::set<CanonicalForm> forms;
  for (const auto& e : census.layers.at(7)) forms.insert(e.form);
  CHECK(forms.size() == 853);
  CHECK(std::is_sorted(census.layers.at(7).begin(), census.layers.at(7).end(),
                       [](const CensusEntry& a, const CensusEntry& b) { return a.form < b.form; }));
}

TEST_CASE("family verdicts") {
  CHECK(classify_graph(Graph::complete(1)) == FamilyVerdict{true, Collapsibility::Yes});
  CHECK(classify_graph(Graph::cycle(4)) == FamilyVerdict{false, Collapsibility::No});
  CHECK(classify_graph(octahedron_plus_edge()) == FamilyVerdict{true, Collapsibility::Yes});
  CHECK(classify_graph(octahedron()) == FamilyVerdict{false, Collapsibility::No});
  CHECK(classify_graph(Graph::path(6), {.collapse_budget = 1}).in_C == Collapsibility::Yes);
  // Homology rules the search out before any budget is spent.
  CHECK(classify_graph(glue_vertex(Graph::cycle(4), 4, VertexSet{0, 1}), {.collapse_budget = 1}).in_C ==
        Collapsibility::No);
}

TEST_CASE("conjecture buckets up to six vertices") {
  auto census = generate_connected(6);
  classify(census, {.parallel = {.jobs = 2}});
  auto report = check_conjecture(census);
  CHECK(report.is_not_collapsible.empty());
  CHECK(report.collapsible_not_is.empty());
  CHECK(report.unknown.empty());
  CHECK(report.unclassified == 0);
  for (const auto& [n, layer] : census.layers)
    for (const auto& e : layer) CHECK(e.verdict->in_IS == exhaustive_tester()(e.form.decode()));

  auto empty = check_conjecture(Census{});
  CHECK(empty.is_not_collapsible.empty());
  CHECK(empty.collapsible_not_is.empty());
  CHECK(empty.unknown.empty());

  std::ostringstream out;
  write_conjecture_report(out, census, report);
  CHECK(out.str().find("n=4 graphs=6") != std::string::npos);
  CHECK(out.str().find("collapsible but not strong: 0") != std::string::npos);
}

TEST_CASE("census files") {
  Census c = generate_connected(4);
  classify(c);
  c.layers[4][0].verdict->in_C = Collapsibility::Unknown;
  c.layers[3][1].verdict.reset();
  std::ostringstream out;
  write_census_layer(out, 3, c.layers[3]);
  CHECK(out.str().starts_with("census 3 2\n"));
  CHECK(out.str().find(" - -\n") != std::string::npos);

  auto dir = scratch_dir("files");
  save_census(dir, c);
  CHECK(load_census(dir) == c);
  CHECK(load_census(dir / "missing").layers.empty());

  std::istringstream bad("census 3 1\nzz 1 1\n");
  int n = 0;
  CHECK_THROWS_AS(parse_census_layer(bad, n), ParseError);
  std::istringstream short_layer("census 3 2\n" + c.layers[3][0].form.hex() + " 1 1\n");
  CHECK_THROWS_AS(parse_census_layer(short_layer, n), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("census resumes from disk") {
  auto dir = scratch_dir("resume");
  Census partial = generate_connected(4);
  classify(partial);
  save_census(dir, partial);

  Census resumed = load_census(dir);
  extend_census(resumed, 6);
  classify(resumed);
  Census fresh = generate_connected(6);
  classify(fresh);
  CHECK(resumed == fresh);
  std::filesystem::remove_all(dir);
}
