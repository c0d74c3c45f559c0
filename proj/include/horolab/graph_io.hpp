#pragma once

#include <iosfwd>
#include <string>

#include "horolab/ball_graph.hpp"

namespace horolab {

void write_dot(const BallGraph& g, std::ostream& out, const std::string& graph_name = "ball");
void write_graphml(const BallGraph& g, std::ostream& out);

// adjacency CSV with header "u,v", one edge per line, vertex ids as strings;
// the basepoint must appear in some edge (or be the only vertex)
BallGraph read_adjacency_csv(std::istream& in, const std::string& basepoint);
void write_adjacency_csv(const BallGraph& g, std::ostream& out);

}  // namespace horolab
