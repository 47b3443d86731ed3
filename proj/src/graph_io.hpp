#pragma once

#include <iosfwd>
#include <string>

#include "graph.hpp"

namespace prg {

enum class GraphFormat { prgb, edge_list };

// PRGB: magic "PRGB", version u8=1, n as 8-byte little-endian unsigned,
// then n rows of ceil(n/64) little-endian 64-bit words (full symmetric
// matrix). Edge list: one "u v" per line, 0-indexed, '#' starts a comment.
void write_graph(const Graph& g, const std::string& path, GraphFormat format);
Graph read_graph(const std::string& path); // sniffs the format by magic

void write_graph(const Graph& g, std::ostream& out, GraphFormat format);
Graph read_graph(std::istream& in);

} // namespace prg
