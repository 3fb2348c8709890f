#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa {

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Sink: return "sink";
    case VertexKind::Regular: return "regular";
    case VertexKind::InfiniteEmitter: return "infinite_emitter";
  }
  return "?";
}

int Graph::find_index(const std::string& name) const {
  // Linear scan: graphs here are desk-scale and this keeps construction
  // allocation-free of index structures.
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int Graph::index_of(const std::string& name) const {
  int i = find_index(name);
  if (i < 0) throw std::invalid_argument("unknown vertex '" + name + "'");
  return i;
}

std::span<const Graph::Bundle> Graph::out_bundles(int v) const {
  auto b = static_cast<std::size_t>(out_begin_[static_cast<std::size_t>(v)]);
  auto e = static_cast<std::size_t>(out_begin_[static_cast<std::size_t>(v) + 1]);
  return {bundles_.data() + b, e - b};
}

Multiplicity Graph::bundle_mult(int s, int t) const {
  for (const Bundle& b : out_bundles(s))
    if (b.target == t) return b.mult;
  return Multiplicity(0);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.names_ != b.names_) return false;
  if (a.bundles_.size() != b.bundles_.size()) return false;
  for (std::size_t i = 0; i < a.bundles_.size(); ++i) {
    const auto& x = a.bundles_[i];
    const auto& y = b.bundles_[i];
    if (x.source != y.source || x.target != y.target || x.mult != y.mult) return false;
  }
  return true;
}

Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<EdgeBundle>& bundles) {
  Graph g;
  g.names_.reserve(vertices.size());
  for (const std::string& name : vertices) {
    if (name.empty()) throw std::invalid_argument("empty vertex name");
    for (unsigned char c : name)
      if (std::isspace(c)) throw std::invalid_argument("vertex name '" + name + "' contains whitespace");
    if (g.find_index(name) >= 0) throw std::invalid_argument("duplicate vertex '" + name + "'");
    g.names_.push_back(name);
  }

  const int n = g.vertex_count();
  g.bundles_.reserve(bundles.size());
  for (const EdgeBundle& eb : bundles) {
    int s = g.find_index(eb.source);
    int t = g.find_index(eb.target);
    if (s < 0) throw std::invalid_argument("bundle references undeclared vertex '" + eb.source + "'");
    if (t < 0) throw std::invalid_argument("bundle references undeclared vertex '" + eb.target + "'");
    if (eb.mult.is_zero())
      throw std::invalid_argument("bundle " + eb.source + " -> " + eb.target + " has multiplicity 0");
    g.bundles_.push_back({s, t, eb.mult});
  }
  std::sort(g.bundles_.begin(), g.bundles_.end(), [](const Graph::Bundle& a, const Graph::Bundle& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t i = 1; i < g.bundles_.size(); ++i)
    if (g.bundles_[i].source == g.bundles_[i - 1].source &&
        g.bundles_[i].target == g.bundles_[i - 1].target)
      throw std::invalid_argument("duplicate bundle " + g.names_[static_cast<std::size_t>(g.bundles_[i].source)] +
                                  " -> " + g.names_[static_cast<std::size_t>(g.bundles_[i].target)]);

  g.out_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
  {
    std::size_t i = 0;
    for (int v = 0; v < n; ++v) {
      g.out_begin_[static_cast<std::size_t>(v)] = static_cast<int>(i);
      while (i < g.bundles_.size() && g.bundles_[i].source == v) ++i;
    }
    g.out_begin_[static_cast<std::size_t>(n)] = static_cast<int>(i);
  }

  g.kinds_.resize(static_cast<std::size_t>(n));
  g.out_degree_.resize(static_cast<std::size_t>(n));
  const bool small = n <= 32;
  g.out_mask_.assign(static_cast<std::size_t>(small ? n : 0), 0);
  g.omega_mask_.assign(static_cast<std::size_t>(small ? n : 0), 0);
  for (int v = 0; v < n; ++v) {
    Multiplicity deg(0);
    for (const Graph::Bundle& b : g.out_bundles(v)) {
      deg += b.mult;
      if (small) {
        g.out_mask_[static_cast<std::size_t>(v)] |= 1u << b.target;
        if (b.mult.is_infinite()) g.omega_mask_[static_cast<std::size_t>(v)] |= 1u << b.target;
      }
    }
    g.out_degree_[static_cast<std::size_t>(v)] = deg;
    g.kinds_[static_cast<std::size_t>(v)] = deg.is_zero()     ? VertexKind::Sink
                                            : deg.is_infinite() ? VertexKind::InfiniteEmitter
                                                                : VertexKind::Regular;
  }
  return g;
}

VertexKind vertex_kind(const Graph& g, const std::string& v) { return g.kind(g.index_of(v)); }

bool reaches(const Graph& g, int v, int w) {
  if (v == w) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack{v};
  seen[static_cast<std::size_t>(v)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const Graph::Bundle& b : g.out_bundles(u)) {
      if (b.target == w) return true;
      if (!seen[static_cast<std::size_t>(b.target)]) {
        seen[static_cast<std::size_t>(b.target)] = 1;
        stack.push_back(b.target);
      }
    }
  }
  return false;
}

bool reaches(const Graph& g, const std::string& v, const std::string& w) {
  return reaches(g, g.index_of(v), g.index_of(w));
}

Graph restricted_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const std::string& name : keep) in[static_cast<std::size_t>(g.index_of(name))] = 1;

  std::vector<std::string> verts;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in[static_cast<std::size_t>(v)]) verts.push_back(g.name_of(v));
  std::vector<EdgeBundle> ebs;
  for (const Graph::Bundle& b : g.bundles())
    if (in[static_cast<std::size_t>(b.source)] && in[static_cast<std::size_t>(b.target)])
      ebs.push_back({g.name_of(b.source), g.name_of(b.target), b.mult});
  return build_graph(verts, ebs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::string> verts = a.vertex_names();
  for (const std::string& name : b.vertex_names()) {
    if (a.has_vertex(name)) throw std::invalid_argument("vertex name collision '" + name + "' in disjoint union");
    verts.push_back(name);
  }
  std::vector<EdgeBundle> ebs;
  for (const Graph::Bundle& e : a.bundles()) ebs.push_back({a.name_of(e.source), a.name_of(e.target), e.mult});
  for (const Graph::Bundle& e : b.bundles()) ebs.push_back({b.name_of(e.source), b.name_of(e.target), e.mult});
  return build_graph(verts, ebs);
}

namespace {

void cycle_search(const Graph& g, int root, int u, std::vector<char>& on_path,
                  std::vector<int>& path, std::vector<std::vector<int>>& out) {
  for (const Graph::Bundle& b : g.out_bundles(u)) {
    int t = b.target;
    if (t == root) {
      out.push_back(path);
      continue;
    }
    if (t < root || on_path[static_cast<std::size_t>(t)]) continue;
    on_path[static_cast<std::size_t>(t)] = 1;
    path.push_back(t);
    cycle_search(g, root, t, on_path, path, out);
    path.pop_back();
    on_path[static_cast<std::size_t>(t)] = 0;
  }
}

}  // namespace

std::vector<std::vector<std::string>> find_cycles(const Graph& g) {
  std::vector<std::vector<int>> raw;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    std::vector<int> path{root};
    on_path[static_cast<std::size_t>(root)] = 1;
    cycle_search(g, root, root, on_path, path, raw);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  std::sort(raw.begin(), raw.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::vector<std::string>> result;
  result.reserve(raw.size());
  for (const auto& c : raw) {
    std::vector<std::string> names;
    names.reserve(c.size());
    for (int v : c) names.push_back(g.name_of(v));
    result.push_back(std::move(names));
  }
  return result;
}

bool is_acyclic(const Graph& g) {
  // Kahn's algorithm over bundle targets.
  const int n = g.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Graph::Bundle& b : g.bundles()) ++indeg[static_cast<std::size_t>(b.target)];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    ++removed;
    for (const Graph::Bundle& b : g.out_bundles(u))
      if (--indeg[static_cast<std::size_t>(b.target)] == 0) queue.push_back(b.target);
  }
  return removed == n;
}

bool has_exit(const Graph& g, const std::vector<std::string>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  std::vector<int> idx;
  idx.reserve(cycle.size());
  for (const std::string& name : cycle) idx.push_back(g.index_of(name));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    int v = idx[i];
    int next = idx[(i + 1) % idx.size()];
    if (g.bundle_mult(v, next).is_zero())
      throw std::invalid_argument("not a cycle: missing bundle " + cycle[i] + " -> " +
                                  cycle[(i + 1) % idx.size()]);
    for (const Graph::Bundle& b : g.out_bundles(v)) {
      if (b.target != next) return true;                      // edge off the cycle
      if (b.mult > Multiplicity(1)) return true;              // spare parallel copy
    }
  }
  return false;
}

}  // namespace lpa
