#include "minorcolor/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "minorcolor/errors.hpp"

namespace minorcolor {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Graph read_dimacs(std::istream& in) {
  int n = -1;
  long declared_edges = -1;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("dimacs line " + std::to_string(line_no) + ": " + msg);
    };
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail("duplicate header");
      if (!(ls >> kind >> n >> declared_edges) || n < 0 || declared_edges < 0) {
        fail("expected 'p edge <n> <m>'");
      }
      if (kind != "edge" && kind != "col") fail("unsupported problem kind '" + kind + "'");
    } else if (tag == "e") {
      long u = 0, v = 0;
      if (n < 0) fail("edge before header");
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex id out of range");
      if (u == v) fail("loop");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw std::runtime_error("dimacs: missing 'p edge' header");
  Graph g(n, std::move(edges));
  if (static_cast<long>(g.size()) != declared_edges) {
    throw std::runtime_error("dimacs: header declares " + std::to_string(declared_edges) +
                             " edges, found " + std::to_string(g.size()));
  }
  return g;
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_dimacs_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dimacs(out, g);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

}  // namespace minorcolor
