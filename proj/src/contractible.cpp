#include "ctgraph/contractible.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ctgraph/errors.hpp"

namespace ctgraph {

namespace {

std::string describe(const ReductionStep& s) {
  return s.is_vertex() ? "V " + std::to_string(s.u) : "E " + std::to_string(s.u) + " " + std::to_string(s.v);
}

}  // namespace

Graph replay(const Graph& g, const ReductionTrace& trace) {
  Graph current = g;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const bool present = s.is_vertex() ? current.has_vertex(s.u) : current.has_edge(s.u, s.v);
    if (!present) throw std::invalid_argument("trace step " + std::to_string(i + 1) + " (" + describe(s) + ") deletes a missing element");
    current = s.is_vertex() ? delete_vertex(current, s.u) : delete_edge(current, s.as_edge());
  }
  return current;
}

ReductionTrace with_links(const Graph& g, ReductionTrace trace) {
  Graph current = g;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    auto& s = trace.steps[i];
    if (s.is_vertex()) {
      if (!current.has_vertex(s.u)) throw std::invalid_argument("trace step " + std::to_string(i + 1) + " (" + describe(s) + ") deletes a missing element");
      s.link = current.adjacent(s.u).to_vector();
      current = delete_vertex(current, s.u);
    } else {
      if (!current.has_edge(s.u, s.v)) throw std::invalid_argument("trace step " + std::to_string(i + 1) + " (" + describe(s) + ") deletes a missing element");
      s.link = (current.adjacent(s.u) & current.adjacent(s.v)).to_vector();
      current = delete_edge(current, s.as_edge());
    }
  }
  return trace;
}

void write_trace(std::ostream& out, const ReductionTrace& trace) {
  out << "trace " << trace.size() << '\n';
  for (const auto& s : trace.steps) out << describe(s) << '\n';
}

ReductionTrace parse_trace(std::istream& in) {
  ReductionTrace trace;
  std::string text;
  int number = 0;
  long expected = -1;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    std::string tag;
    if (!(ss >> tag) || tag.starts_with("#")) continue;
    if (expected < 0) {
      if (tag != "trace" || !(ss >> expected) || expected < 0) throw ParseError(number, "expected header \"trace k\"");
      continue;
    }
    int u = 0, v = 0;
    if (tag == "V" && (ss >> u) && u >= 0) {
      trace.steps.push_back(ReductionStep::vertex(u));
    } else if (tag == "E" && (ss >> u >> v) && u >= 0 && v >= 0 && u != v) {
      trace.steps.push_back(ReductionStep::edge(Edge(u, v)));
    } else {
      throw ParseError(number, "expected \"V v\" or \"E u v\"");
    }
    std::string extra;
    if (ss >> extra) throw ParseError(number, "trailing token '" + extra + "'");
  }
  if (expected < 0) throw ParseError(0, "missing \"trace k\" header");
  if (static_cast<long>(trace.size()) != expected)
    throw ParseError(0, "header announces " + std::to_string(expected) + " steps, found " + std::to_string(trace.size()));
  return trace;
}

bool ContractibilityTester::operator()(const Graph& g) const {
  const int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return g.size() == 1;
  if (!options_.memoize || n > 64) return compute(g);

  const CanonicalForm key = canonical_form(g);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const bool result = compute(g);
  std::unique_lock lock(mutex_);
  if (cache_.size() >= options_.cache_capacity) cache_.clear();
  cache_.emplace(key, result);
  return result;
}

bool ContractibilityTester::compute(const Graph& g) const {
  for (int v : g.vertex_set()) {
    if (!(*this)(neighborhood(g, v))) continue;
    if (!options_.exhaustive) return (*this)(delete_vertex(g, v));
    if ((*this)(delete_vertex(g, v))) return true;
  }
  return false;
}

std::size_t ContractibilityTester::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void ContractibilityTester::clear_cache() const {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

const ContractibilityTester& default_tester() {
  static const ContractibilityTester tester;
  return tester;
}

const ContractibilityTester& exhaustive_tester() {
  static const ContractibilityTester tester(ContractibilityTester::Options{.memoize = true, .exhaustive = true});
  return tester;
}

bool is_strong_contractible(const Graph& g) { return default_tester()(g); }

namespace {

bool delete_first_vertex(Graph& g, ReductionTrace& trace, const ContractibilityTester& test) {
  for (int v : g.vertex_set()) {
    Graph link = neighborhood(g, v);
    if (!test(link)) continue;
    trace.steps.push_back(ReductionStep::vertex(v, link.vertices()));
    g = delete_vertex(g, v);
    return true;
  }
  return false;
}

bool delete_first_edge(Graph& g, ReductionTrace& trace, const ContractibilityTester& test) {
  for (Edge e : g.edges()) {
    Graph link = common_neighborhood(g, e.u, e.v);
    if (!test(link)) continue;
    trace.steps.push_back(ReductionStep::edge(e, link.vertices()));
    g = delete_edge(g, e);
    return true;
  }
  return false;
}

}  // namespace

Reduction contractible_reduction(const Graph& g, const ContractibilityTester& test) {
  Reduction r{g, {}};
  while (delete_first_vertex(r.graph, r.trace, test)) {
  }
  return r;
}

Reduction edge_extended_reduction(const Graph& g, const ContractibilityTester& test) {
  Reduction r{g, {}};
  while (delete_first_vertex(r.graph, r.trace, test) || delete_first_edge(r.graph, r.trace, test)) {
  }
  return r;
}

std::vector<Transformation> legal_transformations(const Graph& g, int glue_bound, const ContractibilityTester& test) {
  using Kind = Transformation::Kind;
  std::vector<Transformation> out;
  for (int v : g.vertex_set())
    if (test(neighborhood(g, v))) out.push_back({Kind::DeleteVertex, v, {}, {}});

  const auto vs = g.vertices();
  const int fresh = g.universe();
  std::vector<int> chosen;
  auto subsets = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < vs.size(); ++i) {
      chosen.push_back(vs[i]);
      const VertexSet s = VertexSet::of(chosen);
      if (test(g.induced(s))) out.push_back({Kind::GlueVertex, fresh, {}, s});
      if (static_cast<int>(chosen.size()) < glue_bound) self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (glue_bound > 0) subsets(subsets, 0);

  for (Edge e : g.edges())
    if (test(common_neighborhood(g, e.u, e.v))) out.push_back({Kind::DeleteEdge, -1, e, {}});
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j]) && test(common_neighborhood(g, vs[i], vs[j])))
        out.push_back({Kind::GlueEdge, -1, Edge(vs[i], vs[j]), {}});
  return out;
}

std::string to_string(Transformation::Kind kind) {
  switch (kind) {
    case Transformation::Kind::DeleteVertex: return "I1";
    case Transformation::Kind::GlueVertex: return "I2";
    case Transformation::Kind::DeleteEdge: return "I3";
    case Transformation::Kind::GlueEdge: return "I4";
  }
  return "?";
}

}  // namespace ctgraph
