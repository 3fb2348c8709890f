#include "lpa/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpa/compatibility.hpp"
#include "lpa/errors.hpp"

namespace lpa {

Graph quotient_graph(const Graph& g, const VertexSet& h, const VertexSet& s) {
  AdmissiblePair p = make_admissible_pair(g, h, s);
  detail::Mask hm = detail::to_mask(g, p.h);
  detail::Mask sm = detail::to_mask(g, p.s);
  detail::Mask primed = detail::breaking_mask(g, hm) & ~sm;  // B_H \ S

  std::vector<std::string> verts;
  std::vector<std::string> prime_name(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!((hm >> v) & 1)) verts.push_back(g.name_of(v));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!((primed >> v) & 1)) continue;
    std::string name = g.name_of(v) + "_prime";
    if (g.has_vertex(name))
      throw std::invalid_argument("quotient vertex name '" + name + "' collides with an existing vertex");
    prime_name[static_cast<std::size_t>(v)] = name;
    verts.push_back(name);
  }

  std::vector<EdgeBundle> bundles;
  for (const Graph::Bundle& b : g.bundles()) {
    if ((hm >> b.target) & 1) continue;  // edges into H vanish
    bundles.push_back({g.name_of(b.source), g.name_of(b.target), b.mult});
    if ((primed >> b.target) & 1)
      bundles.push_back({g.name_of(b.source), prime_name[static_cast<std::size_t>(b.target)], b.mult});
  }
  return build_graph(verts, bundles);
}

namespace {

DecompositionTree decompose_rec(const Graph& g, int limit,
                                const std::optional<WitnessPair>& forced) {
  DecompositionTree t;
  t.graph = g;
  std::optional<WitnessPair> w = forced;
  if (!w) {
    Verdict v = decide(g, limit);
    if (!v.decomposable) return t;
    w = v.witness;
  }
  const auto& [x, y] = *w;
  VertexSet bx = breaking_vertices(g, x);
  VertexSet by = breaking_vertices(g, y);
  t.witness = w;
  // Splitting with S = B_H leaves no primed copies, so each child drops
  // the whole (nonempty) deleted set.
  t.children.push_back(decompose_rec(quotient_graph(g, x, bx), limit, std::nullopt));
  t.children.push_back(decompose_rec(quotient_graph(g, y, by), limit, std::nullopt));
  return t;
}

void collect_leaves(const DecompositionTree& t, std::vector<const Graph*>& out) {
  if (t.leaf()) {
    out.push_back(&t.graph);
    return;
  }
  for (const DecompositionTree& c : t.children) collect_leaves(c, out);
}

}  // namespace

DecompositionTree decompose(const Graph& g, int limit) {
  return decompose_rec(g, limit, std::nullopt);
}

DecompositionTree decompose_with_root_witness(const Graph& g, const WitnessPair& w, int limit) {
  if (!condition_holds(g, w.first, w.second))
    throw std::invalid_argument("forced root witness is not a witness pair for this graph");
  return decompose_rec(g, limit, w);
}

std::vector<Graph> component_graphs(const Graph& g, int limit) {
  DecompositionTree t = decompose(g, limit);
  std::vector<const Graph*> leaves;
  collect_leaves(t, leaves);
  std::vector<Graph> out;
  out.reserve(leaves.size());
  for (const Graph* leaf : leaves) out.push_back(*leaf);
  return out;
}

std::vector<std::string> components(const Graph& g, int limit, int canonical_limit) {
  std::vector<std::string> codes;
  for (const Graph& leaf : component_graphs(g, limit))
    codes.push_back(canonical_form(leaf, canonical_limit));
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace lpa
