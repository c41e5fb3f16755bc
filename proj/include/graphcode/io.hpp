#pragma once

#include <string>
#include <vector>

#include "graphcode/code_model.hpp"
#include "graphcode/zp.hpp"

namespace graphcode {

// Text formats (UTF-8, line oriented; 1-based vertices; '#' comments and
// blank lines ignored; negative weights/entries are sugar for p - |w|).
//
// Graph file:   `graph <p> <n>` then `<a> <b> <w>` lines.
// Code file:    `code <p> <n> <d>` then `edge <a> <b> <w>` lines, then a
//               `clique` line followed by one comma-separated vector per line.
// Parse errors carry the 1-based line number.

struct ParsedCode {
    WeightedGraph graph;
    std::vector<ZpVec> clique;
    int d = 1;
};

WeightedGraph parse_graph_text(const std::string& text);
WeightedGraph parse_graph_file(const std::string& path);

ParsedCode parse_code_text(const std::string& text);
ParsedCode parse_code_file(const std::string& path);

std::string serialize_graph(const WeightedGraph& g);
std::string serialize_code(const GraphCode& code);

void write_text_file(const std::string& path, const std::string& text);

} // namespace graphcode
