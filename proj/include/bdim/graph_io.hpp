#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bdim/broadcast.hpp"
#include "bdim/graph.hpp"

namespace bdim {

// Graph format: "n m" header, then m lines "u v" (0-based). Broadcast format:
// lines "v value" for positive values. Vertex-set format: whitespace-separated
// vertex indices. In all three, '#' starts a comment running to end of line.
// Readers throw InvalidInput on malformed input.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

BroadcastFn read_broadcast(std::istream& in, int n);
void write_broadcast(std::ostream& out, const BroadcastFn& f);

std::vector<Vertex> read_vertex_set(std::istream& in, int n);
void write_vertex_set(std::ostream& out, const std::vector<Vertex>& set);

Graph load_graph(const std::string& path);
BroadcastFn load_broadcast(const std::string& path, int n);
std::vector<Vertex> load_vertex_set(const std::string& path, int n);

}  // namespace bdim
