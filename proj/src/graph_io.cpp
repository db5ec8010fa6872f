#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pst/error.hpp"
#include "pst/graph.hpp"

namespace pst {

void write_graph(std::ostream& os, const Graph& g) {
  os << "n=" << g.size() << '\n';
  const auto flags = os.flags();
  os << std::setprecision(17);
  for (const auto& [key, w] : g.edges()) {
    os << key.first << ' ' << key.second << ' ' << w << '\n';
  }
  os.flags(flags);
}

Graph read_graph(std::istream& is) {
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n=", 0) != 0) throw InvalidArgument("graph file: expected header `n=<N>`");
    try {
      std::size_t used = 0;
      n = std::stoi(line.substr(2), &used);
      if (used != line.size() - 2) throw InvalidArgument("graph file: bad header");
    } catch (const std::logic_error&) {
      throw InvalidArgument("graph file: bad header `" + line + "`");
    }
    break;
  }
  if (n < 1) throw InvalidArgument("graph file: missing or invalid header");

  EdgeMap w;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int i = 0;
    int j = 0;
    double value = 0.0;
    std::string rest;
    if (!(fields >> i >> j >> value) || (fields >> rest)) {
      throw InvalidArgument("graph file: malformed edge on line " + std::to_string(lineno));
    }
    const auto key = edge_key(i, j);
    if (w.contains(key) && w[key] != value) {
      throw InvalidArgument("graph file: conflicting weights for edge on line " + std::to_string(lineno));
    }
    w[key] = value;
  }
  return Graph(n, std::move(w));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file " + path);
  return read_graph(in);
}

}  // namespace pst
