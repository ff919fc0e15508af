#include "safeset/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace safeset {

namespace {

// One logical line; returns false at EOF. Blank lines are not allowed inside
// either format, so they surface as parse errors at the caller.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(1, "missing header 'n m'");

  std::istringstream header(line);
  std::string ntok, mtok, extra;
  if (!(header >> ntok >> mtok) || (header >> extra))
    throw ParseError(lineno, "expected header 'n m'");
  int n = parse_int(ntok, lineno, "vertex count");
  int m = parse_int(mtok, lineno, "edge count");
  if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in header");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno))
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
    std::istringstream row(line);
    std::string utok, vtok;
    if (!(row >> utok >> vtok) || (row >> extra))
      throw ParseError(lineno, "expected edge 'u v'");
    edges.push_back({parse_int(utok, lineno, "vertex index"),
                     parse_int(vtok, lineno, "vertex index")});
  }
  try {
    return Graph(n, edges);
  } catch (const std::exception& e) {
    throw ParseError(lineno, e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<Rational> read_weights(std::istream& in) {
  std::vector<Rational> weights;
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    try {
      weights.push_back(Rational::parse(line));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return weights;
}

void write_weights(std::ostream& out, std::span<const Rational> weights) {
  for (const Rational& w : weights) out << w.str() << '\n';
}

Graph load_graph(const std::filesystem::path& file) {
  auto in = open_input(file);
  return read_graph(in);
}

std::vector<Rational> load_weights(const std::filesystem::path& file) {
  auto in = open_input(file);
  return read_weights(in);
}

void save_graph(const std::filesystem::path& file, const Graph& g) {
  auto out = open_output(file);
  write_graph(out, g);
}

void save_weights(const std::filesystem::path& file, std::span<const Rational> weights) {
  auto out = open_output(file);
  write_weights(out, weights);
}

WeightedGraph load_weighted_graph(const std::filesystem::path& graph_file,
                                  const std::filesystem::path& weights_file) {
  Graph g = load_graph(graph_file);
  std::vector<Rational> w = load_weights(weights_file);
  if (static_cast<int>(w.size()) != g.order())
    throw std::runtime_error(weights_file.string() + ": " +
                             std::to_string(w.size()) + " weights for a graph of order " +
                             std::to_string(g.order()));
  return WeightedGraph(std::move(g), std::move(w));
}

}  // namespace safeset
