#ifndef LPA_TEXT_FORMAT_HPP
#define LPA_TEXT_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "lpa/graph.hpp"

namespace lpa {

/// Line-oriented graph text format:
///   # comment            (ignored, as are blank lines)
///   vertex <name>        (declaration order is significant)
///   edge <src> <dst> <mult>   where <mult> is a positive integer or `inf`
/// Vertices must be declared before edges mention them.
/// Throws parse_error with a line number on malformed input.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

std::string format_graph(const Graph& g);

/// Graphviz rendering; bundle multiplicities become edge labels.
std::string to_dot(const Graph& g, const std::string& name = "E");

}  // namespace lpa

#endif  // LPA_TEXT_FORMAT_HPP
