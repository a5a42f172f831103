#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctgraph/graph.hpp"

namespace ctgraph {

/// Isomorphism-invariant encoding of a graph: byte 0 is the order, followed by
/// the upper triangle of the canonically relabeled adjacency matrix packed
/// row by row, most significant bit first. Vertex ids and labels do not
/// participate.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static CanonicalForm from_hex(const std::string& text);

  /// Rebuilds the canonical representative on vertices 0..n-1.
  Graph decode() const;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical vertex order: `order[k]` is the vertex placed at position k.
/// Individualization-refinement search with automorphism pruning; exact.
/// Limited to graphs with at most 64 vertices.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace ctgraph

template <>
struct std::hash<ctgraph::CanonicalForm> {
  std::size_t operator()(const ctgraph::CanonicalForm& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto b : f.bytes) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};
