#include "lpa/text_format.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

Multiplicity parse_mult(const std::string& tok, int line) {
  if (tok == "inf") return Multiplicity::infinity();
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("multiplicity must be a positive integer or 'inf', got '" + tok + "'", line);
  std::uint64_t v = 0;
  try {
    v = std::stoull(tok);
  } catch (const std::exception&) {
    throw parse_error("multiplicity out of range: '" + tok + "'", line);
  }
  if (v == 0) throw parse_error("multiplicity must be positive", line);
  return Multiplicity(v);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::vector<std::string> vertices;
  std::vector<EdgeBundle> bundles;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;        // blank
    if (tok[0] == '#') continue;       // comment
    if (tok == "vertex") {
      std::string name, extra;
      if (!(ls >> name)) throw parse_error("vertex directive needs a name", lineno);
      if (ls >> extra) throw parse_error("unexpected token '" + extra + "'", lineno);
      for (const std::string& v : vertices)
        if (v == name) throw parse_error("duplicate vertex '" + name + "'", lineno);
      vertices.push_back(name);
    } else if (tok == "edge") {
      std::string src, dst, mult, extra;
      if (!(ls >> src >> dst >> mult)) throw parse_error("edge directive needs <src> <dst> <mult>", lineno);
      if (ls >> extra) throw parse_error("unexpected token '" + extra + "'", lineno);
      auto declared = [&](const std::string& v) {
        for (const std::string& d : vertices)
          if (d == v) return true;
        return false;
      };
      if (!declared(src)) throw parse_error("edge references undeclared vertex '" + src + "'", lineno);
      if (!declared(dst)) throw parse_error("edge references undeclared vertex '" + dst + "'", lineno);
      for (const EdgeBundle& b : bundles)
        if (b.source == src && b.target == dst)
          throw parse_error("duplicate bundle " + src + " -> " + dst, lineno);
      bundles.push_back({src, dst, parse_mult(mult, lineno)});
    } else {
      throw parse_error("unknown directive '" + tok + "'", lineno);
    }
  }
  try {
    return build_graph(vertices, bundles);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (const std::string& v : g.vertex_names()) out += "vertex " + v + "\n";
  for (const Graph::Bundle& b : g.bundles())
    out += "edge " + g.name_of(b.source) + " " + g.name_of(b.target) + " " + b.mult.str() + "\n";
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (const std::string& v : g.vertex_names()) out += "  \"" + v + "\";\n";
  for (const Graph::Bundle& b : g.bundles()) {
    out += "  \"" + g.name_of(b.source) + "\" -> \"" + g.name_of(b.target) + "\"";
    if (b.mult > Multiplicity(1) || b.mult.is_infinite()) out += " [label=\"" + b.mult.str() + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace lpa
