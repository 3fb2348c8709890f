#ifndef LPA_HSAT_HPP
#define LPA_HSAT_HPP

#include <cstdint>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

inline constexpr int kDefaultEnumerationLimit = 16;

/// H hereditary: every bundle with source in H has its target in H.
bool is_hereditary(const Graph& g, const VertexSet& h);

/// H saturated: no regular vertex outside H has all of its edge targets
/// inside H. Sinks and infinite emitters impose no condition.
bool is_saturated(const Graph& g, const VertexSet& h);

/// Least hereditary and saturated superset of the given vertices.
VertexSet hsat_closure(const Graph& g, const VertexSet& a);

/// Every hereditary saturated subset, including the empty set and the full
/// vertex set, sorted by size then lexicographically by sorted names.
std::vector<VertexSet> enumerate_hsat(const Graph& g, int limit = kDefaultEnumerationLimit);

/// Breaking vertices of a hereditary saturated H: infinite emitters outside
/// H with at least one edge landing outside H but only finitely many.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

/// A hereditary saturated set together with a subset of its breaking
/// vertices. Validated eagerly by make_admissible_pair.
struct AdmissiblePair {
  VertexSet h;
  VertexSet s;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

AdmissiblePair make_admissible_pair(const Graph& g, const VertexSet& h, const VertexSet& s);

/// Lattice meet and join of admissible pairs (graded-ideal lattice).
AdmissiblePair meet(const Graph& g, const AdmissiblePair& p1, const AdmissiblePair& p2);
AdmissiblePair join(const Graph& g, const AdmissiblePair& p1, const AdmissiblePair& p2);

bool is_top(const Graph& g, const AdmissiblePair& p);
bool is_bottom(const AdmissiblePair& p);

namespace detail {

/// Bitmask layer over vertex indices; all functions assume
/// g.masks_available() and validated inputs unless noted.
using Mask = std::uint32_t;

Mask full_mask(const Graph& g);
Mask to_mask(const Graph& g, const VertexSet& s);
VertexSet to_set(const Graph& g, Mask m);

bool hereditary_mask(const Graph& g, Mask h);
bool saturated_mask(const Graph& g, Mask h);
Mask closure_mask(const Graph& g, Mask a);
Mask breaking_mask(const Graph& g, Mask h);

/// Hereditary saturated masks, ordered by (popcount, name-lexicographic).
std::vector<Mask> enumerate_hsat_masks(const Graph& g, int limit);

/// Comparator matching the documented set order: size, then
/// lexicographic on sorted vertex names. rank_of is name_rank_of(g).
std::vector<int> name_rank_of(const Graph& g);
bool mask_set_less(const Graph& g, const std::vector<int>& rank_of, Mask a, Mask b);
bool mask_set_less(const Graph& g, Mask a, Mask b);

struct MaskPair {
  Mask h;
  Mask s;
  friend bool operator==(MaskPair, MaskPair) = default;
};

MaskPair meet_mask(const Graph& g, MaskPair a, MaskPair b);
MaskPair join_mask(const Graph& g, MaskPair a, MaskPair b);

void require_masks(const Graph& g);

}  // namespace detail

}  // namespace lpa

#endif  // LPA_HSAT_HPP
