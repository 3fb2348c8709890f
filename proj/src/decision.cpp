#include "lpa/decision.hpp"

#include <algorithm>
#include <bit>

#include "lpa/compatibility.hpp"
#include "lpa/errors.hpp"

namespace lpa {

namespace {

using detail::Mask;

// Unordered candidate pairs {X, Y}, disjoint and nontrivial, ordered by
// (|X| + |Y|, X, Y) with the name-lexicographically smaller set first.
std::vector<std::pair<Mask, Mask>> candidate_pairs(const Graph& g, int limit) {
  std::vector<Mask> hsat = detail::enumerate_hsat_masks(g, limit);
  const Mask full = detail::full_mask(g);
  std::vector<Mask> nontrivial;
  for (Mask m : hsat)
    if (m != 0 && m != full) nontrivial.push_back(m);

  const std::vector<int> rank = detail::name_rank_of(g);
  std::vector<std::pair<Mask, Mask>> pairs;
  for (std::size_t i = 0; i < nontrivial.size(); ++i)
    for (std::size_t j = i + 1; j < nontrivial.size(); ++j) {
      Mask a = nontrivial[i], b = nontrivial[j];
      if (a & b) continue;
      if (detail::mask_set_less(g, rank, b, a)) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
    int sp = std::popcount(p.first) + std::popcount(p.second);
    int sq = std::popcount(q.first) + std::popcount(q.second);
    if (sp != sq) return sp < sq;
    if (p.first != q.first) return detail::mask_set_less(g, rank, p.first, q.first);
    return detail::mask_set_less(g, rank, p.second, q.second);
  });
  return pairs;
}

Verdict found(const Graph& g, Mask x, Mask y) {
  Verdict v;
  v.decomposable = true;
  v.witness = WitnessPair{detail::to_set(g, x), detail::to_set(g, y)};
  return v;
}

bool row_finite_witness(const Graph& g, Mask x, Mask y) {
  const Mask u = x | y;
  // (1) every vertex reaches X ∪ Y: backward closure of the union.
  Mask reach = u;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!((reach >> v) & 1) && (g.out_target_mask(v) & reach)) {
        reach |= Mask{1} << v;
        changed = true;
      }
  }
  if (reach != detail::full_mask(g)) return false;
  // (2) no cycle in the subgraph induced outside X ∪ Y: Kahn over it.
  const int n = g.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Graph::Bundle& b : g.bundles())
    if (!((u >> b.source) & 1) && !((u >> b.target) & 1)) ++indeg[static_cast<std::size_t>(b.target)];
  std::vector<int> queue;
  int outside_count = 0;
  for (int v = 0; v < n; ++v) {
    if ((u >> v) & 1) continue;
    ++outside_count;
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (const Graph::Bundle& b : g.out_bundles(v))
      if (!((u >> b.target) & 1) && --indeg[static_cast<std::size_t>(b.target)] == 0)
        queue.push_back(b.target);
  }
  return removed == outside_count;
}

}  // namespace

Verdict decide(const Graph& g, int limit) {
  for (const auto& [x, y] : candidate_pairs(g, limit))
    if (detail::condition_holds_mask(g, x, y)) return found(g, x, y);
  return {};
}

Verdict decide_row_finite(const Graph& g, int limit) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == VertexKind::InfiniteEmitter)
      throw scope_error("graph has an infinite emitter ('" + g.name_of(v) +
                        "'); the row-finite criterion does not apply, use decide");
  for (const auto& [x, y] : candidate_pairs(g, limit))
    if (row_finite_witness(g, x, y)) return found(g, x, y);
  return {};
}

std::vector<WitnessPair> all_witness_pairs(const Graph& g, int limit) {
  std::vector<WitnessPair> out;
  for (const auto& [x, y] : candidate_pairs(g, limit))
    if (detail::condition_holds_mask(g, x, y))
      out.emplace_back(detail::to_set(g, x), detail::to_set(g, y));
  return out;
}

}  // namespace lpa
