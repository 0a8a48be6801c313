// io.hpp — text formats: edge lists and assignment label lines
#pragma once

#include <iosfwd>
#include <string>

#include "dsg/assignment.hpp"
#include "dsg/graph.hpp"

namespace dsg {

// Whitespace-separated "u v" pairs, 0-indexed, one edge per line. Blank lines
// and lines starting with '#' are skipped. Vertex count is max index + 1.
// Errors name the offending line.
GraphPtr load_edge_list(std::istream& in, const std::string& origin = "<stream>");
GraphPtr load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// One line of n whitespace-separated integers in 1..t, vertex order 0..n-1.
// t is inferred as the maximum label unless given (t = 0 means infer).
Assignment load_assignment(std::istream& in, GraphPtr g, int t = 0,
                           const std::string& origin = "<stream>");
Assignment load_assignment_file(const std::string& path, GraphPtr g, int t = 0);
void write_assignment(std::ostream& out, const Assignment& a);
void write_assignment_file(const std::string& path, const Assignment& a);

} // namespace dsg
