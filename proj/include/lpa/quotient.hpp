#ifndef LPA_QUOTIENT_HPP
#define LPA_QUOTIENT_HPP

#include <optional>
#include <vector>

#include "lpa/canonical.hpp"
#include "lpa/decision.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Quotient graph by an admissible pair (H, S): delete H and the edges
/// into it, and for every breaking vertex of H not selected by S add a
/// primed sink copy `<v>_prime` receiving duplicates of the edges into v.
Graph quotient_graph(const Graph& g, const VertexSet& h, const VertexSet& s);

/// Recursive split of a graph along witness pairs down to indecomposable
/// component graphs. Splitting always uses the full breaking-vertex sets,
/// so children shrink strictly.
struct DecompositionTree {
  Graph graph;
  std::optional<WitnessPair> witness;       // absent on leaves
  std::vector<DecompositionTree> children;  // [quotient by (X,B_X), quotient by (Y,B_Y)]

  bool leaf() const { return !witness.has_value(); }
};

DecompositionTree decompose(const Graph& g, int limit = kDefaultEnumerationLimit);

/// Same recursion but with a forced witness for the root split (must be a
/// valid witness pair for g).
DecompositionTree decompose_with_root_witness(const Graph& g, const WitnessPair& w,
                                              int limit = kDefaultEnumerationLimit);

/// Canonical codes of the leaves of decompose(g), as a sorted multiset.
std::vector<std::string> components(const Graph& g, int limit = kDefaultEnumerationLimit,
                                    int canonical_limit = kDefaultCanonicalLimit);

/// Leaf graphs of decompose(g) in left-to-right order.
std::vector<Graph> component_graphs(const Graph& g, int limit = kDefaultEnumerationLimit);

}  // namespace lpa

#endif  // LPA_QUOTIENT_HPP
