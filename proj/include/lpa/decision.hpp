#ifndef LPA_DECISION_HPP
#define LPA_DECISION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hsat.hpp"

namespace lpa {

using WitnessPair = std::pair<VertexSet, VertexSet>;

struct Verdict {
  bool decomposable = false;
  std::optional<WitnessPair> witness;  // present exactly when decomposable

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Decides decomposability: scans unordered pairs of disjoint nontrivial
/// hereditary saturated sets in a fixed order (by |X|+|Y|, then
/// lexicographically on sorted names, the smaller set first) and returns
/// the first pair for which every outside vertex has at least one but
/// finitely many compatible paths.
Verdict decide(const Graph& g, int limit = kDefaultEnumerationLimit);

/// The specialized criterion for graphs without infinite emitters: a pair
/// (X, Y) is a witness iff every vertex reaches X ∪ Y and the subgraph
/// induced outside X ∪ Y is acyclic. Throws scope_error on graphs with
/// infinite bundles (use decide there; this criterion is unsound for them).
Verdict decide_row_finite(const Graph& g, int limit = kDefaultEnumerationLimit);

/// Every witness pair, in the same order decide scans them.
std::vector<WitnessPair> all_witness_pairs(const Graph& g, int limit = kDefaultEnumerationLimit);

}  // namespace lpa

#endif  // LPA_DECISION_HPP
