#ifndef LPA_RECOGNIZER_HPP
#define LPA_RECOGNIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hsat.hpp"

namespace lpa {

enum class AlgebraFamily {
  MatrixAlgebra,        // M_size(K)
  LaurentPolynomials,   // K[x, x^-1]
  MatrixOverLaurent,    // M_size(K[x, x^-1])
  LeavittAlgebra,       // L(1, n)
  MatrixOverLeavitt,    // M_size(L(1, n))
  Unknown,
};

std::string to_string(AlgebraFamily f);

struct AlgebraDescriptor {
  AlgebraFamily family = AlgebraFamily::Unknown;
  std::uint64_t size = 0;  // matrix size, when the family has one
  std::uint64_t n = 0;     // Leavitt parameter, when the family has one

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// Weak connectivity (edges traversable both ways).
bool is_connected(const Graph& g);

/// Every ordered vertex pair is joined by a directed path.
bool is_directly_connected(const Graph& g);

/// Matches the graph against the named families with well-known Leavitt
/// path algebras: line graphs, loops, roses, exitless cycles, lines into
/// roses, two-vertex parallel bundles. Anything else is Unknown.
AlgebraDescriptor recognize(const Graph& g);

/// recognize applied to every component graph of the decomposition, in
/// leaf order.
std::vector<AlgebraDescriptor> describe_decomposition(const Graph& g,
                                                      int limit = kDefaultEnumerationLimit);

}  // namespace lpa

#endif  // LPA_RECOGNIZER_HPP
