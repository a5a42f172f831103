#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "ctgraph/canonical.hpp"
#include "ctgraph/contractible.hpp"
#include "ctgraph/parallel.hpp"
#include "ctgraph/persistence.hpp"
#include "ctgraph/simplicial.hpp"

namespace ctgraph {

enum class Collapsibility { No, Yes, Unknown };

struct FamilyVerdict {
  bool in_IS = false;
  /// Unknown when the collapse search ran out of budget.
  Collapsibility in_C = Collapsibility::Unknown;

  bool operator==(const FamilyVerdict&) const = default;
};

struct CensusEntry {
  CanonicalForm form;
  std::optional<FamilyVerdict> verdict;

  bool operator==(const CensusEntry&) const = default;
};

/// Connected graphs up to isomorphism, by vertex count, each layer sorted by
/// canonical form.
struct Census {
  std::map<int, std::vector<CensusEntry>> layers;

  int max_order() const { return layers.empty() ? 0 : layers.rbegin()->first; }
  std::size_t size() const;
  /// Graph counts for n = 1..max_order.
  std::vector<std::size_t> counts() const;
  bool operator==(const Census&) const = default;
};

inline constexpr int kMaxCensusOrder = 9;
inline constexpr int kDefaultCensusOrder = 8;

/// Breadth-first closure of K(1) under "add a vertex joined to one existing
/// vertex" and "add a missing edge", deduplicated by canonical form. Throws
/// std::invalid_argument unless 1 <= n_max <= 9.
Census generate_connected(int n_max, const ParallelOptions& parallel = {});

/// Adds layers up to n_max, starting from the largest layer already present.
void extend_census(Census& census, int n_max, const ParallelOptions& parallel = {});

struct ClassifyOptions {
  std::size_t collapse_budget = kDefaultCollapseBudget;
  ParallelOptions parallel;
};

/// Verdict for one graph. Strongly contractible graphs are certified
/// collapsible by the collapse read off their reduction trace; the others go
/// through the bounded collapse search.
FamilyVerdict classify_graph(const Graph& g, const ClassifyOptions& options = {},
                             const ContractibilityTester& test = default_tester());

/// Fills in every missing verdict.
void classify(Census& census, const ClassifyOptions& options = {},
              const ContractibilityTester& test = default_tester());

struct ConjectureReport {
  /// Strongly contractible but not collapsible.
  std::vector<CanonicalForm> is_not_collapsible;
  /// Collapsible but not strongly contractible.
  std::vector<CanonicalForm> collapsible_not_is;
  /// Collapse search exhausted.
  std::vector<CanonicalForm> unknown;
  /// Entries without a verdict.
  std::size_t unclassified = 0;
};

ConjectureReport check_conjecture(const Census& census);
void write_conjecture_report(std::ostream& out, const Census& census, const ConjectureReport& report);

/// One layer per file "census_<n>.txt": header "census n count", then
/// "hex in_IS in_C" with in_IS in {1, 0, -} and in_C in {1, 0, ?, -}; '-'
/// marks an unclassified entry and '?' an exhausted search.
void write_census_layer(std::ostream& out, int n, const std::vector<CensusEntry>& layer);
std::vector<CensusEntry> parse_census_layer(std::istream& in, int& n);

void save_census(const std::filesystem::path& dir, const Census& census);
/// Reads every census_<n>.txt in `dir`; a missing directory gives an empty
/// census. Throws ParseError naming the file on malformed content.
Census load_census(const std::filesystem::path& dir);

}  // namespace ctgraph
