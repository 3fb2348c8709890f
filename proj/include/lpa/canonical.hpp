#ifndef LPA_CANONICAL_HPP
#define LPA_CANONICAL_HPP

#include <string>

#include "lpa/graph.hpp"

namespace lpa {

inline constexpr int kDefaultCanonicalLimit = 12;

/// Canonical code of a graph: equal strings exactly for graphs that are
/// isomorphic as multigraphs with multiplicity-labeled bundles (the
/// infinite multiplicity is its own label). Backtracking minimal-label
/// search with invariant-class pruning; throws scope_error above the
/// vertex limit.
std::string canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);

}  // namespace lpa

#endif  // LPA_CANONICAL_HPP
