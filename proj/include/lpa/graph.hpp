#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lpa/multiplicity.hpp"

namespace lpa {

enum class VertexKind { Sink, Regular, InfiniteEmitter };

std::string to_string(VertexKind k);

/// Parallel edges from one vertex to another are stored as a single
/// bundle with a multiplicity (possibly infinite).
struct EdgeBundle {
  std::string source;
  std::string target;
  Multiplicity mult;
};

/// A set of vertices of some graph, by name. Kept sorted by the container.
using VertexSet = std::set<std::string>;

/// Finite directed multigraph with multiplicity-labeled edge bundles.
/// Immutable after construction; all queries are pure.
class Graph {
public:
  struct Bundle {
    int source;
    int target;
    Multiplicity mult;
  };

  Graph() = default;  // the empty graph

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name_of(int v) const { return names_[static_cast<std::size_t>(v)]; }

  bool has_vertex(const std::string& name) const { return find_index(name) >= 0; }
  /// Index in declaration order; throws std::invalid_argument for unknown names.
  int index_of(const std::string& name) const;

  /// All bundles, ascending by (source, target) index.
  const std::vector<Bundle>& bundles() const { return bundles_; }
  std::span<const Bundle> out_bundles(int v) const;

  /// Multiplicity of the (s, t) bundle, zero when absent.
  Multiplicity bundle_mult(int s, int t) const;

  VertexKind kind(int v) const { return kinds_[static_cast<std::size_t>(v)]; }
  Multiplicity out_degree(int v) const { return out_degree_[static_cast<std::size_t>(v)]; }

  /// Bitmasks over vertex indices, available while vertex_count() <= 32.
  std::uint32_t out_target_mask(int v) const { return out_mask_[static_cast<std::size_t>(v)]; }
  std::uint32_t omega_target_mask(int v) const { return omega_mask_[static_cast<std::size_t>(v)]; }
  bool masks_available() const { return vertex_count() <= 32; }

  friend bool operator==(const Graph& a, const Graph& b);

  friend Graph build_graph(const std::vector<std::string>& vertices,
                           const std::vector<EdgeBundle>& bundles);

private:
  int find_index(const std::string& name) const;

  std::vector<std::string> names_;
  std::vector<Bundle> bundles_;          // sorted by (source, target)
  std::vector<int> out_begin_;           // CSR offsets into bundles_, size n+1
  std::vector<VertexKind> kinds_;
  std::vector<Multiplicity> out_degree_;
  std::vector<std::uint32_t> out_mask_;
  std::vector<std::uint32_t> omega_mask_;
};

/// Validates and freezes a graph. Throws std::invalid_argument for
/// duplicate or malformed vertex names, bundles on undeclared vertices,
/// duplicate (source, target) bundles, and zero multiplicities.
Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<EdgeBundle>& bundles);

VertexKind vertex_kind(const Graph& g, const std::string& v);

/// True iff w == v or a directed path of positive length leads from v to w.
bool reaches(const Graph& g, const std::string& v, const std::string& w);
bool reaches(const Graph& g, int v, int w);

/// Induced subgraph on the given vertices (bundles with both endpoints inside).
Graph restricted_subgraph(const Graph& g, const VertexSet& keep);

/// Union of two graphs with disjoint vertex name sets.
Graph disjoint_union(const Graph& a, const Graph& b);

/// All simple cycles as vertex name sequences [v1, ..., vk] meaning
/// v1 -> v2 -> ... -> vk -> v1, each rotated to start at the smallest
/// vertex index, listed sorted by (length, index sequence).
std::vector<std::vector<std::string>> find_cycles(const Graph& g);

bool is_acyclic(const Graph& g);

/// True iff some vertex of the cycle emits an edge that is not the cycle
/// edge leaving it (another bundle, or spare parallel copies in the
/// cycle's own bundle).
bool has_exit(const Graph& g, const std::vector<std::string>& cycle);

}  // namespace lpa

#endif  // LPA_GRAPH_HPP
