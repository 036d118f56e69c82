#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "cfcon/graph.hpp"

namespace cfcon {

// Edge-list text format:
//   n m
//   u v        (m lines, 0-indexed, ascending edge-id order)
// Errors carry the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Splits a line into whitespace-separated integer fields. Returns false if a
// field is not a base-10 integer.
bool parse_int_fields(const std::string& line, std::vector<long long>& fields);

}  // namespace cfcon
