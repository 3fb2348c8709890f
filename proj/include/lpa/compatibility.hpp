#ifndef LPA_COMPATIBILITY_HPP
#define LPA_COMPATIBILITY_HPP

#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hsat.hpp"

namespace lpa {

/// Reachability structure for compatible-path counting: the vertices
/// outside X ∪ Y plus one absorbing target, with every compatible bundle
/// re-targeted so that landing anywhere in X ∪ Y means landing on the
/// absorbing target.
struct ReducedGraph {
  static constexpr int kAbsorbing = -1;

  struct Arc {
    int source;              // index into base
    int target;              // index into base, or kAbsorbing
    Multiplicity mult;
  };

  std::vector<std::string> base;  // names outside X ∪ Y, declaration order
  std::vector<Arc> arcs;
};

/// False exactly when the bundle leaves a breaking vertex of X into X, or
/// a breaking vertex of Y into Y.
bool is_compatible_bundle(const Graph& g, const VertexSet& x, const VertexSet& y,
                          const EdgeBundle& bundle);

ReducedGraph build_reduced(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Number of distinct XY-compatible paths starting at v (edge sequences;
/// a bundle of multiplicity m contributes a factor m). Infinite exactly
/// when the part of the reduced graph both reachable from v and leading
/// to the absorbing target contains a cycle or an infinite bundle.
Multiplicity count_compatible_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                    const std::string& v);

/// The decomposability test for the witness pair (X, Y): every vertex
/// outside X ∪ Y has at least one but finitely many compatible paths.
/// Vacuously true when X ∪ Y covers all vertices.
bool condition_holds(const Graph& g, const VertexSet& x, const VertexSet& y);

namespace detail {

/// Unvalidated mask-level core used by the decision procedures.
Multiplicity count_compatible_paths_mask(const Graph& g, Mask x, Mask y, int v);
bool condition_holds_mask(const Graph& g, Mask x, Mask y);

}  // namespace detail

}  // namespace lpa

#endif  // LPA_COMPATIBILITY_HPP
