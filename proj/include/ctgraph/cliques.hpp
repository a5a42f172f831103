#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ctgraph/graph.hpp"

namespace ctgraph {

/// All cliques with exactly `size` vertices, each ascending, in
/// lexicographic order. `size == 0` yields nothing.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int size);

/// Every nonempty clique in lexicographic order. Throws BudgetExceeded once
/// more than `limit` cliques would be produced.
std::vector<std::vector<int>> all_cliques(const Graph& g, std::size_t limit);

/// Inclusion-maximal cliques (Bron–Kerbosch with pivoting), sorted.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

/// Number of vertices of a largest clique.
int clique_number(const Graph& g);

}  // namespace ctgraph
