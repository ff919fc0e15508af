#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "safeset/graph.hpp"

namespace safeset {

/// Parse failure carrying the 1-based line number of the offending input.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

/// Graph file: first line "n m", then m lines "u v" with 0-based endpoints.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Weight file: one weight per line, "p/q" or decimal; line i = vertex i.
std::vector<Rational> read_weights(std::istream& in);
void write_weights(std::ostream& out, std::span<const Rational> weights);

Graph load_graph(const std::filesystem::path& file);
std::vector<Rational> load_weights(const std::filesystem::path& file);
void save_graph(const std::filesystem::path& file, const Graph& g);
void save_weights(const std::filesystem::path& file, std::span<const Rational> weights);

/// Reads both files and pairs them; the weight count must match the order.
WeightedGraph load_weighted_graph(const std::filesystem::path& graph_file,
                                  const std::filesystem::path& weights_file);

}  // namespace safeset
