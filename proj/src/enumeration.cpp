#include "ctgraph/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ctgraph/errors.hpp"

namespace ctgraph {

std::size_t Census::size() const {
  std::size_t total = 0;
  for (const auto& [n, layer] : layers) total += layer.size();
  return total;
}

std::vector<std::size_t> Census::counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_order()), 0);
  for (const auto& [n, layer] : layers) out[static_cast<std::size_t>(n - 1)] = layer.size();
  return out;
}

namespace {

using FormSet = std::unordered_set<CanonicalForm>;

// Forms reachable by one move from each graph in `from`, computed in parallel
// and merged in input order.
template <typename Moves>
std::vector<CanonicalForm> expand(const std::vector<CanonicalForm>& from, const ParallelOptions& parallel,
                                  Moves&& moves) {
  std::vector<std::vector<CanonicalForm>> found(from.size());
  parallel_for(from.size(), parallel.jobs, [&](std::size_t i) { found[i] = moves(from[i].decode()); });
  std::vector<CanonicalForm> out;
  for (auto& f : found) out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  return out;
}

std::vector<CanonicalForm> next_layer(const std::vector<CanonicalForm>& previous, int n,
                                      const ParallelOptions& parallel) {
  FormSet seen;
  std::vector<CanonicalForm> frontier;
  const auto keep_new = [&](std::vector<CanonicalForm> candidates) {
    std::vector<CanonicalForm> fresh;
    for (auto& c : candidates)
      if (seen.insert(c).second) fresh.push_back(std::move(c));
    return fresh;
  };
  // Move 1: a new vertex n-1 attached to one existing vertex.
  frontier = keep_new(expand(previous, parallel, [n](const Graph& g) {
    std::vector<CanonicalForm> out;
    for (int i = 0; i < n - 1; ++i) out.push_back(canonical_form(glue_vertex(g, n - 1, VertexSet{i})));
    return out;
  }));
  // Move 2: missing edges, breadth first until nothing new appears.
  while (!frontier.empty()) {
    frontier = keep_new(expand(frontier, parallel, [](const Graph& g) {
      std::vector<CanonicalForm> out;
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
          if (!g.has_edge(u, v)) out.push_back(canonical_form(glue_edge(g, Edge(u, v))));
      return out;
    }));
  }
  std::vector<CanonicalForm> layer(seen.begin(), seen.end());
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

void extend_census(Census& census, int n_max, const ParallelOptions& parallel) {
  if (n_max < 1 || n_max > kMaxCensusOrder)
    throw std::invalid_argument("census order must be between 1 and " + std::to_string(kMaxCensusOrder));
  if (census.layers.empty()) census.layers[1] = {{canonical_form(Graph::complete(1)), std::nullopt}};
  for (int n = census.max_order() + 1; n <= n_max; ++n) {
    const auto& prev = census.layers.at(n - 1);
    std::vector<CanonicalForm> forms;
    for (const auto& e : prev) forms.push_back(e.form);
    auto& layer = census.layers[n];
    for (auto& f : next_layer(forms, n, parallel)) layer.push_back({std::move(f), std::nullopt});
  }
}

Census generate_connected(int n_max, const ParallelOptions& parallel) {
  Census c;
  extend_census(c, n_max, parallel);
  return c;
}

FamilyVerdict classify_graph(const Graph& g, const ClassifyOptions& options, const ContractibilityTester& test) {
  FamilyVerdict v;
  v.in_IS = test(g);
  if (v.in_IS) {
    const auto reduction = contractible_reduction(g, test);
    const auto complex = clique_complex(g);
    if (collapse_sequence(complex, collapse_via_trace(g, reduction.trace, test)).is_point()) {
      v.in_C = Collapsibility::Yes;
      return v;
    }
    // Not expected; fall back to the search so the census still reports honestly.
  }
  switch (is_collapsible(clique_complex(g), options.collapse_budget).verdict) {
    case CollapseResult::Verdict::Collapsible: v.in_C = Collapsibility::Yes; break;
    case CollapseResult::Verdict::NotCollapsible: v.in_C = Collapsibility::No; break;
    case CollapseResult::Verdict::Exhausted: v.in_C = Collapsibility::Unknown; break;
  }
  return v;
}

void classify(Census& census, const ClassifyOptions& options, const ContractibilityTester& test) {
  std::vector<CensusEntry*> todo;
  for (auto& [n, layer] : census.layers)
    for (auto& e : layer)
      if (!e.verdict) todo.push_back(&e);
  parallel_for(todo.size(), options.parallel.jobs,
               [&](std::size_t i) { todo[i]->verdict = classify_graph(todo[i]->form.decode(), options, test); });
}

ConjectureReport check_conjecture(const Census& census) {
  ConjectureReport r;
  for (const auto& [n, layer] : census.layers)
    for (const auto& e : layer) {
      if (!e.verdict) {
        ++r.unclassified;
        continue;
      }
      const auto& v = *e.verdict;
      if (v.in_C == Collapsibility::Unknown)
        r.unknown.push_back(e.form);
      else if (v.in_IS && v.in_C == Collapsibility::No)
        r.is_not_collapsible.push_back(e.form);
      else if (!v.in_IS && v.in_C == Collapsibility::Yes)
        r.collapsible_not_is.push_back(e.form);
    }
  return r;
}

void write_conjecture_report(std::ostream& out, const Census& census, const ConjectureReport& report) {
  for (const auto& [n, layer] : census.layers) {
    std::size_t is = 0, c = 0;
    for (const auto& e : layer)
      if (e.verdict) {
        is += e.verdict->in_IS;
        c += e.verdict->in_C == Collapsibility::Yes;
      }
    out << "n=" << n << " graphs=" << layer.size() << " strong=" << is << " collapsible=" << c << '\n';
  }
  const auto list = [&](const char* title, const std::vector<CanonicalForm>& forms) {
    out << title << ": " << forms.size() << '\n';
    for (const auto& f : forms) out << "  " << f.hex() << '\n';
  };
  list("strong but not collapsible", report.is_not_collapsible);
  list("collapsible but not strong", report.collapsible_not_is);
  list("unknown", report.unknown);
  if (report.unclassified > 0) out << "unclassified: " << report.unclassified << '\n';
}

void write_census_layer(std::ostream& out, int n, const std::vector<CensusEntry>& layer) {
  out << "census " << n << ' ' << layer.size() << '\n';
  for (const auto& e : layer) {
    out << e.form.hex() << ' ';
    if (!e.verdict) {
      out << "- -\n";
      continue;
    }
    out << (e.verdict->in_IS ? '1' : '0') << ' ';
    switch (e.verdict->in_C) {
      case Collapsibility::Yes: out << '1'; break;
      case Collapsibility::No: out << '0'; break;
      case Collapsibility::Unknown: out << '?'; break;
    }
    out << '\n';
  }
}

std::vector<CensusEntry> parse_census_layer(std::istream& in, int& n) {
  std::string text;
  int line = 0;
  std::size_t count = 0;
  bool header = false;
  std::vector<CensusEntry> out;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ss(text);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    if (!header) {
      if (tok.size() != 3 || tok[0] != "census") throw ParseError(line, "header must be \"census n count\"");
      try {
        n = std::stoi(tok[1]);
        count = std::stoul(tok[2]);
      } catch (const std::exception&) {
        throw ParseError(line, "header must be \"census n count\"");
      }
      header = true;
      continue;
    }
    if (tok.size() != 3) throw ParseError(line, "expected \"hex in_IS in_C\"");
    CensusEntry e;
    try {
      e.form = CanonicalForm::from_hex(tok[0]);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line, err.what());
    }
    if (e.form.bytes[0] != n) throw ParseError(line, "graph order does not match the layer");
    if (tok[1] == "-" && tok[2] == "-") {
      out.push_back(std::move(e));
      continue;
    }
    if (tok[1] != "0" && tok[1] != "1") throw ParseError(line, "in_IS must be 0, 1 or -");
    FamilyVerdict v;
    v.in_IS = tok[1] == "1";
    if (tok[2] == "1")
      v.in_C = Collapsibility::Yes;
    else if (tok[2] == "0")
      v.in_C = Collapsibility::No;
    else if (tok[2] == "?")
      v.in_C = Collapsibility::Unknown;
    else
      throw ParseError(line, "in_C must be 0, 1, ? or -");
    e.verdict = v;
    out.push_back(std::move(e));
  }
  if (!header) throw ParseError(0, "missing census header");
  if (out.size() != count)
    throw ParseError(0, "header announces " + std::to_string(count) + " graphs, found " + std::to_string(out.size()));
  return out;
}

void save_census(const std::filesystem::path& dir, const Census& census) {
  std::filesystem::create_directories(dir);
  for (const auto& [n, layer] : census.layers) {
    const auto target = dir / ("census_" + std::to_string(n) + ".txt");
    const auto tmp = dir / ("census_" + std::to_string(n) + ".txt.tmp");
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
      write_census_layer(out, n, layer);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }
}

Census load_census(const std::filesystem::path& dir) {
  Census c;
  if (!std::filesystem::is_directory(dir)) return c;
  static const std::regex name("census_([0-9]+)\\.txt");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const std::string file = entry.path().filename().string();
    if (!std::regex_match(file, m, name)) continue;
    std::ifstream in(entry.path());
    int n = 0;
    try {
      auto layer = parse_census_layer(in, n);
      if (n != std::stoi(m[1].str())) throw ParseError(1, "layer number does not match the file name");
      c.layers[n] = std::move(layer);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), entry.path().string() + ": " + e.what());
    }
  }
  // Layers must be contiguous from 1 to be extended.
  int expect = 1;
  for (const auto& [n, layer] : c.layers)
    if (n != expect++) throw ParseError(0, dir.string() + ": census layers are not contiguous from 1");
  return c;
}

}  // namespace ctgraph
