#include "lpa/compatibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa {

namespace detail {

namespace {

struct ReducedArcs {
  // Arc lists per outside vertex; target -1 is the absorbing vertex.
  struct Arc {
    int target;
    Multiplicity mult;
  };
  std::vector<std::vector<Arc>> out;  // indexed by original vertex id; empty inside X∪Y
  Mask outside;
};

ReducedArcs reduced_arcs(const Graph& g, Mask x, Mask y) {
  const Mask u = x | y;
  const Mask bx = breaking_mask(g, x);
  const Mask by = breaking_mask(g, y);
  ReducedArcs r;
  r.outside = full_mask(g) & ~u;
  r.out.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((u >> v) & 1) continue;
    Multiplicity into_u(0);
    for (const Graph::Bundle& b : g.out_bundles(v)) {
      bool excluded = (((bx >> v) & 1) && ((x >> b.target) & 1)) ||
                      (((by >> v) & 1) && ((y >> b.target) & 1));
      if (excluded) continue;
      if ((u >> b.target) & 1)
        into_u += b.mult;
      else
        r.out[static_cast<std::size_t>(v)].push_back({b.target, b.mult});
    }
    if (!into_u.is_zero()) r.out[static_cast<std::size_t>(v)].push_back({-1, into_u});
  }
  return r;
}

// Count on the useful part (reachable from v and co-reachable to the
// absorbing target): infinite on a cycle or infinite bundle, otherwise a
// path count by dynamic programming over the acyclic part.
Multiplicity count_from(const Graph& g, const ReducedArcs& r, int v) {
  const int n = g.vertex_count();
  // Forward reachability from v over reduced arcs.
  std::vector<char> fwd(static_cast<std::size_t>(n), 0);
  bool reaches_absorbing = false;
  {
    std::vector<int> stack{v};
    fwd[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (const auto& arc : r.out[static_cast<std::size_t>(a)]) {
        if (arc.target < 0) {
          reaches_absorbing = true;
          continue;
        }
        if (!fwd[static_cast<std::size_t>(arc.target)]) {
          fwd[static_cast<std::size_t>(arc.target)] = 1;
          stack.push_back(arc.target);
        }
      }
    }
  }
  if (!reaches_absorbing) return Multiplicity(0);

  // Co-reachability to the absorbing target (reverse closure).
  std::vector<char> coreach(static_cast<std::size_t>(n), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (coreach[static_cast<std::size_t>(a)] || !((r.outside >> a) & 1)) continue;
      for (const auto& arc : r.out[static_cast<std::size_t>(a)]) {
        if (arc.target < 0 || coreach[static_cast<std::size_t>(arc.target)]) {
          coreach[static_cast<std::size_t>(a)] = 1;
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<char> useful(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    useful[static_cast<std::size_t>(a)] =
        fwd[static_cast<std::size_t>(a)] && coreach[static_cast<std::size_t>(a)];

  // Infinite bundle inside the useful part?
  for (int a = 0; a < n; ++a) {
    if (!useful[static_cast<std::size_t>(a)]) continue;
    for (const auto& arc : r.out[static_cast<std::size_t>(a)])
      if (arc.mult.is_infinite() &&
          (arc.target < 0 || useful[static_cast<std::size_t>(arc.target)]))
        return Multiplicity::infinity();
  }

  // Topological order of the useful vertices; a leftover means a cycle.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    if (!useful[static_cast<std::size_t>(a)]) continue;
    for (const auto& arc : r.out[static_cast<std::size_t>(a)])
      if (arc.target >= 0 && useful[static_cast<std::size_t>(arc.target)])
        ++indeg[static_cast<std::size_t>(arc.target)];
  }
  std::vector<int> order, queue;
  for (int a = 0; a < n; ++a)
    if (useful[static_cast<std::size_t>(a)] && indeg[static_cast<std::size_t>(a)] == 0)
      queue.push_back(a);
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    order.push_back(a);
    for (const auto& arc : r.out[static_cast<std::size_t>(a)])
      if (arc.target >= 0 && useful[static_cast<std::size_t>(arc.target)] &&
          --indeg[static_cast<std::size_t>(arc.target)] == 0)
        queue.push_back(arc.target);
  }
  std::size_t useful_count = 0;
  for (int a = 0; a < n; ++a) useful_count += useful[static_cast<std::size_t>(a)] ? 1u : 0u;
  if (order.size() != useful_count) return Multiplicity::infinity();

  std::vector<Multiplicity> count(static_cast<std::size_t>(n), Multiplicity(0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Multiplicity c(0);
    for (const auto& arc : r.out[static_cast<std::size_t>(*it)]) {
      if (arc.target < 0)
        c += arc.mult;  // absorbing target counts once
      else if (useful[static_cast<std::size_t>(arc.target)])
        c += arc.mult * count[static_cast<std::size_t>(arc.target)];
    }
    count[static_cast<std::size_t>(*it)] = c;
  }
  return count[static_cast<std::size_t>(v)];
}

}  // namespace

Multiplicity count_compatible_paths_mask(const Graph& g, Mask x, Mask y, int v) {
  ReducedArcs r = reduced_arcs(g, x, y);
  return count_from(g, r, v);
}

bool condition_holds_mask(const Graph& g, Mask x, Mask y) {
  const Mask outside = full_mask(g) & ~(x | y);
  if (outside == 0) return true;
  ReducedArcs r = reduced_arcs(g, x, y);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!((outside >> v) & 1)) continue;
    Multiplicity c = count_from(g, r, v);
    if (c.is_zero() || c.is_infinite()) return false;
  }
  return true;
}

}  // namespace detail

namespace {

void check_disjoint_hsat(const Graph& g, const VertexSet& x, const VertexSet& y,
                         detail::Mask& xm, detail::Mask& ym) {
  detail::require_masks(g);
  xm = detail::to_mask(g, x);
  ym = detail::to_mask(g, y);
  if (!detail::hereditary_mask(g, xm) || !detail::saturated_mask(g, xm))
    throw std::invalid_argument("X is not hereditary and saturated");
  if (!detail::hereditary_mask(g, ym) || !detail::saturated_mask(g, ym))
    throw std::invalid_argument("Y is not hereditary and saturated");
  if (xm & ym) throw std::invalid_argument("X and Y are not disjoint");
}

}  // namespace

bool is_compatible_bundle(const Graph& g, const VertexSet& x, const VertexSet& y,
                          const EdgeBundle& bundle) {
  detail::Mask xm, ym;
  check_disjoint_hsat(g, x, y, xm, ym);
  int s = g.index_of(bundle.source);
  int t = g.index_of(bundle.target);
  detail::Mask bx = detail::breaking_mask(g, xm);
  detail::Mask by = detail::breaking_mask(g, ym);
  bool excluded = (((bx >> s) & 1) && ((xm >> t) & 1)) || (((by >> s) & 1) && ((ym >> t) & 1));
  return !excluded;
}

ReducedGraph build_reduced(const Graph& g, const VertexSet& x, const VertexSet& y) {
  detail::Mask xm, ym;
  check_disjoint_hsat(g, x, y, xm, ym);
  const detail::Mask u = xm | ym;
  const detail::Mask bx = detail::breaking_mask(g, xm);
  const detail::Mask by = detail::breaking_mask(g, ym);

  ReducedGraph r;
  std::vector<int> base_index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((u >> v) & 1) continue;
    base_index[static_cast<std::size_t>(v)] = static_cast<int>(r.base.size());
    r.base.push_back(g.name_of(v));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((u >> v) & 1) continue;
    Multiplicity into_u(0);
    for (const Graph::Bundle& b : g.out_bundles(v)) {
      bool excluded = (((bx >> v) & 1) && ((xm >> b.target) & 1)) ||
                      (((by >> v) & 1) && ((ym >> b.target) & 1));
      if (excluded) continue;
      if ((u >> b.target) & 1)
        into_u += b.mult;
      else
        r.arcs.push_back({base_index[static_cast<std::size_t>(v)],
                          base_index[static_cast<std::size_t>(b.target)], b.mult});
    }
    if (!into_u.is_zero())
      r.arcs.push_back({base_index[static_cast<std::size_t>(v)], ReducedGraph::kAbsorbing, into_u});
  }
  std::sort(r.arcs.begin(), r.arcs.end(), [](const ReducedGraph::Arc& a, const ReducedGraph::Arc& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  return r;
}

Multiplicity count_compatible_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                    const std::string& v) {
  detail::Mask xm, ym;
  check_disjoint_hsat(g, x, y, xm, ym);
  int vi = g.index_of(v);
  if (((xm | ym) >> vi) & 1)
    throw std::invalid_argument("vertex '" + v + "' lies inside X ∪ Y");
  return detail::count_compatible_paths_mask(g, xm, ym, vi);
}

bool condition_holds(const Graph& g, const VertexSet& x, const VertexSet& y) {
  detail::Mask xm, ym;
  check_disjoint_hsat(g, x, y, xm, ym);
  // Nontrivial means nonempty and proper; disjoint nonempty sets are
  // automatically proper.
  if (x.empty() || y.empty())
    throw std::invalid_argument("X and Y must be nonempty");
  return detail::condition_holds_mask(g, xm, ym);
}

}  // namespace lpa
