#include "lpa/recognizer.hpp"

#include <algorithm>

#include "lpa/quotient.hpp"

namespace lpa {

std::string to_string(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::MatrixAlgebra: return "matrix_algebra";
    case AlgebraFamily::LaurentPolynomials: return "laurent_polynomials";
    case AlgebraFamily::MatrixOverLaurent: return "matrix_over_laurent";
    case AlgebraFamily::LeavittAlgebra: return "leavitt";
    case AlgebraFamily::MatrixOverLeavitt: return "matrix_over_leavitt";
    case AlgebraFamily::Unknown: return "unknown";
  }
  return "?";
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Graph::Bundle& b : g.bundles()) {
    adj[static_cast<std::size_t>(b.source)].push_back(b.target);
    adj[static_cast<std::size_t>(b.target)].push_back(b.source);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

bool is_directly_connected(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (!reaches(g, v, w)) return false;
  return true;
}

namespace {

// The directed path v_0 -> v_1 -> ... -> v_{k-1} following unique single
// out-edges, or empty when the graph is not such a chain. `chain` receives
// the vertex indices in path order.
bool line_order(const Graph& g, std::vector<int>& chain) {
  const int n = g.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Graph::Bundle& b : g.bundles()) ++indeg[static_cast<std::size_t>(b.target)];
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) {
      if (start >= 0) return false;
      start = v;
    }
  if (start < 0) return false;
  chain.clear();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int v = start;
  for (;;) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    chain.push_back(v);
    auto out = g.out_bundles(v);
    if (out.empty()) break;
    if (out.size() != 1 || out[0].mult != Multiplicity(1)) return false;
    if (indeg[static_cast<std::size_t>(out[0].target)] != 1) return false;
    v = out[0].target;
  }
  return static_cast<int>(chain.size()) == n;
}

}  // namespace

AlgebraDescriptor recognize(const Graph& g) {
  const int n = g.vertex_count();
  const auto& bundles = g.bundles();

  // Line graph: n vertices in a single-edge path, nothing else.
  {
    std::vector<int> chain;
    if (n >= 1 && static_cast<int>(bundles.size()) == n - 1 && line_order(g, chain))
      return {AlgebraFamily::MatrixAlgebra, static_cast<std::uint64_t>(n), 0};
  }

  // Single vertex with one loop bundle.
  if (n == 1 && bundles.size() == 1 && bundles[0].source == bundles[0].target &&
      !bundles[0].mult.is_infinite()) {
    std::uint64_t m = bundles[0].mult.value();
    if (m == 1) return {AlgebraFamily::LaurentPolynomials, 0, 0};
    return {AlgebraFamily::LeavittAlgebra, 0, m};
  }

  // Cycle through every vertex, single edges, no exits.
  if (n >= 2 && static_cast<int>(bundles.size()) == n) {
    bool cyc = true;
    for (int v = 0; v < n && cyc; ++v) {
      auto out = g.out_bundles(v);
      cyc = out.size() == 1 && out[0].mult == Multiplicity(1);
    }
    if (cyc) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      int v = 0, steps = 0;
      while (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        v = g.out_bundles(v)[0].target;
        ++steps;
      }
      if (v == 0 && steps == n)
        return {AlgebraFamily::MatrixOverLaurent, static_cast<std::uint64_t>(n), 0};
    }
  }

  // Line of n vertices whose last vertex carries a rose of m >= 2 loops.
  if (n >= 2 && static_cast<int>(bundles.size()) == n) {
    // Drop the loop bundle at its vertex and the rest must be a line
    // ending there.
    for (const Graph::Bundle& b : bundles) {
      if (b.source != b.target || b.mult.is_infinite() || b.mult < Multiplicity(2)) continue;
      std::vector<EdgeBundle> rest;
      for (const Graph::Bundle& c : bundles)
        if (&c != &b) rest.push_back({g.name_of(c.source), g.name_of(c.target), c.mult});
      Graph line = build_graph(g.vertex_names(), rest);
      std::vector<int> chain;
      if (line_order(line, chain) && chain.back() == b.source)
        return {AlgebraFamily::MatrixOverLeavitt, static_cast<std::uint64_t>(n), b.mult.value()};
      break;  // at most one loop bundle can exist when |bundles| == n
    }
  }

  // Two vertices joined by one finite parallel bundle: paths into the sink
  // number m + 1, hence the matrix size.
  if (n == 2 && bundles.size() == 1 && bundles[0].source != bundles[0].target &&
      !bundles[0].mult.is_infinite())
    return {AlgebraFamily::MatrixAlgebra, bundles[0].mult.value() + 1, 0};

  return {AlgebraFamily::Unknown, 0, 0};
}

std::vector<AlgebraDescriptor> describe_decomposition(const Graph& g, int limit) {
  std::vector<AlgebraDescriptor> out;
  for (const Graph& leaf : component_graphs(g, limit)) out.push_back(recognize(leaf));
  return out;
}

}  // namespace lpa
