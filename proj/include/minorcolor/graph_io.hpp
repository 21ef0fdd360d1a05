#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// DIMACS-style edge format: comment lines start with `c`, one header line
/// `p edge <n> <m>`, then `e <u> <v>` lines. Ids are 1-based on disk and
/// 0-based in memory. The header edge count is checked against the number
/// of distinct edges read.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::filesystem::path& path);
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::filesystem::path& path, const Graph& g);
std::string to_dimacs(const Graph& g);

}  // namespace minorcolor
