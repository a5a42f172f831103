#include "ctgraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "ctgraph/contractible.hpp"
#include "ctgraph/enumeration.hpp"
#include "ctgraph/errors.hpp"
#include "ctgraph/graph_io.hpp"
#include "ctgraph/homology.hpp"
#include "ctgraph/persistence.hpp"
#include "ctgraph/simplicial.hpp"

namespace ctgraph::cli {

namespace {

// Input file trouble, reported as "file:line: message".
struct InputError {
  std::string file;
  int line;
  std::string message;
};

struct UsageError {
  std::string message;
};

Graph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw InputError{path, e.line(), e.what()};
  } catch (const std::invalid_argument& e) {
    throw InputError{path, 0, e.what()};
  }
}

Coefficients parse_coefficients(const std::string& text) {
  if (text == "z" || text == "Z") return Coefficients::integers();
  if (text.size() > 1 && (text[0] == 'z' || text[0] == 'Z')) {
    try {
      std::size_t used = 0;
      const long long p = std::stoll(text.substr(1), &used);
      if (used == text.size() - 1) return Coefficients::zp(p);
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw UsageError{"--coeff must be z, z2 or zP for a prime P, got '" + text + "'"};
}

std::vector<double> parse_thresholds(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError{"bad threshold '" + item + "'"};
    }
  }
  return out;
}

const char* yes_no(Collapsibility c) {
  switch (c) {
    case Collapsibility::Yes: return "yes";
    case Collapsibility::No: return "no";
    case Collapsibility::Unknown: break;
  }
  return "unknown";
}

void print_pairs(std::ostream& out, const std::vector<FreePair>& pairs, const Graph& names) {
  for (const auto& p : pairs) out << to_string(p.sigma, &names) << ' ' << to_string(p.tau, &names) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong contractibility, collapses, homology and Rips persistence for graphs", "ctgraph"};
  app.require_subcommand(1);

  std::string graph_path;
  bool with_collapse = false;
  std::size_t collapse_budget = kDefaultCollapseBudget;
  auto* check = app.add_subcommand("check", "Test strong contractibility (and optionally collapsibility)");
  check->add_option("graph", graph_path, "Edge list or adjacency matrix file")->required();
  check->add_flag("--with-collapse", with_collapse, "Also decide collapsibility of the clique complex");
  check->add_option("--collapse-budget", collapse_budget, "State budget for the collapse search");

  bool edges = false;
  std::string trace_out;
  auto* reduce = app.add_subcommand("reduce", "Delete contractible vertices (and edges) until none qualifies");
  reduce->add_option("graph", graph_path, "Graph file")->required();
  reduce->add_flag("--edges", edges, "Also delete edges with contractible common neighborhood");
  reduce->add_option("--trace-out", trace_out, "Write the trace here instead of after the graph");

  auto* collapse = app.add_subcommand("collapse", "Search for a collapse of the clique complex to a point");
  collapse->add_option("graph", graph_path, "Graph file")->required();
  collapse->add_option("--budget", collapse_budget, "State budget for the collapse search");

  std::string coeff = "z2";
  int max_dim = -1;
  auto* homology_cmd = app.add_subcommand("homology", "Homology of the clique complex");
  homology_cmd->add_option("graph", graph_path, "Graph file")->required();
  homology_cmd->add_option("--coeff", coeff, "z2 (default), zP for a prime P, or z");
  homology_cmd->add_option("--max-dim", max_dim, "Highest dimension to report")->check(CLI::NonNegativeNumber);

  std::string cloud_path, matrix_path, thresholds;
  int max_p = 1;
  bool oracle = false;
  unsigned jobs = 1;
  auto* vr = app.add_subcommand("vr", "Rips persistence barcode via per-stage reductions");
  auto* cloud_opt = vr->add_option("cloud", cloud_path, "CSV file, one point per row");
  auto* matrix_opt = vr->add_option("--matrix", matrix_path, "Distance matrix file instead of points");
  cloud_opt->excludes(matrix_opt);
  vr->add_option("--max-dim", max_p, "Highest homology dimension")->check(CLI::NonNegativeNumber);
  vr->add_flag("--oracle", oracle, "Cross-check against plain column reduction");
  vr->add_option("--thresholds", thresholds, "Comma separated, starting at 0");
  vr->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  int census_n = kDefaultCensusOrder;
  std::string census_dir;
  auto* census_cmd = app.add_subcommand("census", "Enumerate and classify connected graphs");
  census_cmd->add_option("--n", census_n, "Largest vertex count")->check(CLI::Range(1, kMaxCensusOrder));
  census_cmd->add_option("--out", census_dir, "Directory for per-layer census files (resumed if present)");
  census_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  census_cmd->add_option("--collapse-budget", collapse_budget, "State budget for the collapse search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*check) {
      const Graph g = load_graph(graph_path);
      out << "IS: " << (is_strong_contractible(g) ? "yes" : "no") << '\n';
      if (with_collapse) {
        const ClassifyOptions options{.collapse_budget = collapse_budget, .parallel = {}};
        out << "C: " << yes_no(classify_graph(g, options).in_C) << '\n';
      }
      return kOk;
    }
    if (*reduce) {
      const Graph g = load_graph(graph_path);
      const Reduction r = edges ? edge_extended_reduction(g) : contractible_reduction(g);
      write_edge_list(out, r.graph);
      if (trace_out.empty()) {
        write_trace(out, r.trace);
      } else {
        std::ofstream t(trace_out);
        write_trace(t, r.trace);
        if (!t) throw std::runtime_error("cannot write " + trace_out);
      }
      return kOk;
    }
    if (*collapse) {
      const Graph g = load_graph(graph_path);
      if (g.order() == 0) throw InputError{graph_path, 0, "graph has no vertices"};
      if (is_strong_contractible(g)) {
        out << "collapsible: yes\n";
        print_pairs(out, collapse_via_trace(g, contractible_reduction(g).trace), g);
        return kOk;
      }
      const auto res = is_collapsible(clique_complex(g), collapse_budget);
      switch (res.verdict) {
        case CollapseResult::Verdict::Collapsible:
          out << "collapsible: yes\n";
          print_pairs(out, res.witness, g);
          return kOk;
        case CollapseResult::Verdict::NotCollapsible: out << "collapsible: no\n"; return kOk;
        case CollapseResult::Verdict::Exhausted:
          out << "collapsible: unknown\n";
          err << "error: collapse search stopped after " << res.states_visited << " states\n";
          return kBudget;
      }
    }
    if (*homology_cmd) {
      const Coefficients k = parse_coefficients(coeff);
      const Graph g = load_graph(graph_path);
      write_homology(out, homology(g, k, max_dim < 0 ? kAllDimensions : max_dim));
      return kOk;
    }
    if (*vr) {
      if (cloud_path.empty() == matrix_path.empty()) throw UsageError{"give exactly one of a cloud file or --matrix"};
      const std::string& path = matrix_path.empty() ? cloud_path : matrix_path;
      std::ifstream in(path);
      if (!in) throw InputError{path, 0, "cannot open " + path};
      PointCloud cloud = [&] {
        try {
          return parse_point_cloud(in, !matrix_path.empty());
        } catch (const ParseError& e) {
          throw InputError{path, e.line(), e.what()};
        } catch (const std::invalid_argument& e) {
          throw InputError{path, 0, e.what()};
        }
      }();
      std::optional<std::vector<double>> t;
      if (!thresholds.empty()) t = parse_thresholds(thresholds);
      Filtration f;
      try {
        f = vr_filtration(cloud, t);
      } catch (const std::invalid_argument& e) {
        throw UsageError{e.what()};
      }
      const Barcode b = PersistencePipeline(f, max_p, {.jobs = jobs}).barcode();
      write_barcode_csv(out, b);
      if (oracle) out << (oracle_persistence(f, max_p) == b ? "MATCH" : "MISMATCH") << '\n';
      return kOk;
    }
    if (*census_cmd) {
      Census c;
      if (!census_dir.empty()) {
        try {
          c = load_census(census_dir);
        } catch (const ParseError& e) {
          throw InputError{census_dir, e.line(), e.what()};
        }
      }
      const ClassifyOptions options{.collapse_budget = collapse_budget, .parallel = {.jobs = jobs}};
      // Classify and save layer by layer so an interrupted run resumes.
      for (int n = 1; n <= census_n; ++n) {
        if (!c.layers.contains(n)) extend_census(c, n, options.parallel);
        Census layer;
        layer.layers[n] = std::move(c.layers[n]);
        classify(layer, options);
        c.layers[n] = std::move(layer.layers[n]);
        if (!census_dir.empty()) {
          Census one;
          one.layers[n] = c.layers[n];
          save_census(census_dir, one);
        }
      }
      Census shown;
      for (int n = 1; n <= census_n; ++n) shown.layers[n] = c.layers[n];
      write_conjecture_report(out, shown, check_conjecture(shown));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << e.file;
    if (e.line > 0) err << ':' << e.line;
    err << ": " << e.message << '\n';
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace ctgraph::cli
