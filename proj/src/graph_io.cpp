#include "dgp/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "dgp/error.hpp"

namespace dgp {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

bool trailing_junk(std::istringstream& ss) {
  std::string rest;
  return static_cast<bool>(ss >> rest);
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int vertices = -1;
  long expected = -1;
  std::vector<std::pair<int, int>> endpoints;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    if (vertices < 0) {
      std::string word;
      long v = -1, n = -1;
      if (!(ss >> word) || word != "graph") throw ParseError(line_no, "expected header 'graph <V> <N>'");
      if (!(ss >> v >> n) || trailing_junk(ss)) throw ParseError(line_no, "malformed header");
      if (v < 0 || n < 0 || v > 1000000 || n > 1000000) throw ParseError(line_no, "header counts out of range");
      vertices = static_cast<int>(v);
      expected = n;
      continue;
    }
    long u = -1, w = -1;
    if (!(ss >> u >> w) || trailing_junk(ss)) throw ParseError(line_no, "expected '<u> <v>'");
    if (u < 0 || w < 0 || u >= vertices || w >= vertices)
      throw ParseError(line_no, "vertex out of range");
    if (static_cast<long>(endpoints.size()) == expected) throw ParseError(line_no, "more edges than declared");
    endpoints.push_back({static_cast<int>(u), static_cast<int>(w)});
  }
  if (vertices < 0) throw ParseError(line_no, "missing header");
  if (static_cast<long>(endpoints.size()) != expected)
    throw ParseError(line_no, "declared " + std::to_string(expected) + " edges, found " +
                                  std::to_string(endpoints.size()));
  return MultiGraph(vertices, endpoints);
}

MultiGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

MultiGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << '\n';
  return out.str();
}

}  // namespace dgp
