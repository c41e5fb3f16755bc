#include "graphcode/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace graphcode {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

i64 parse_int(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const i64 v = std::stoll(tok, &used);
        if (used != tok.size()) fail(line_no, "bad integer '" + tok + "'");
        return v;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        fail(line_no, "bad integer '" + tok + "'");
    }
}

struct Lines {
    std::vector<std::string> raw; // with comments/blank lines stripped out
    std::vector<std::size_t> num; // original 1-based line numbers
};

Lines significant_lines(const std::string& text) {
    Lines ls;
    std::size_t line_no = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        ls.raw.push_back(line);
        ls.num.push_back(line_no);
    }
    return ls;
}

// weight sugar: negative values mean p - |w|
i64 reduce_weight(i64 w, i64 p, std::size_t line_no) {
    if (w >= p || w <= -p) fail(line_no, "weight " + std::to_string(w) + " out of range for p=" +
                                             std::to_string(p));
    return mod_reduce(w, p);
}

void add_edge(WeightedGraph& g, std::set<std::pair<int, int>>& seen, i64 a, i64 b, i64 w,
              std::size_t line_no) {
    if (a < 1 || a > g.n || b < 1 || b > g.n) fail(line_no, "vertex out of range");
    if (a == b) fail(line_no, "self loops are not allowed");
    const int a0 = static_cast<int>(a), b0 = static_cast<int>(b);
    if (!seen.insert({std::min(a0, b0), std::max(a0, b0)}).second)
        fail(line_no, "duplicate edge");
    g.set_edge(a0 - 1, b0 - 1, reduce_weight(w, g.p, line_no));
}

std::pair<i64, int> parse_header_pn(const std::vector<std::string>& toks, std::size_t line_no) {
    const i64 p = parse_int(toks[1], line_no);
    const i64 n = parse_int(toks[2], line_no);
    if (p < 2) fail(line_no, "modulus p must be at least 2");
    if (n < 1 || n > 64) fail(line_no, "vertex count out of range");
    return {p, static_cast<int>(n)};
}

} // namespace

WeightedGraph parse_graph_text(const std::string& text) {
    Lines ls = significant_lines(text);
    if (ls.raw.empty()) throw InputError("line 1: empty graph file");
    auto head = split_ws(ls.raw[0]);
    if (head.size() != 3 || head[0] != "graph")
        fail(ls.num[0], "expected header 'graph <p> <n>'");
    auto [p, n] = parse_header_pn(head, ls.num[0]);
    WeightedGraph g = WeightedGraph::empty(p, n);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < ls.raw.size(); ++i) {
        auto toks = split_ws(ls.raw[i]);
        if (toks.size() != 3) fail(ls.num[i], "expected '<a> <b> <w>'");
        add_edge(g, seen, parse_int(toks[0], ls.num[i]), parse_int(toks[1], ls.num[i]),
                 parse_int(toks[2], ls.num[i]), ls.num[i]);
    }
    return g;
}

ParsedCode parse_code_text(const std::string& text) {
    Lines ls = significant_lines(text);
    if (ls.raw.empty()) throw InputError("line 1: empty code file");
    auto head = split_ws(ls.raw[0]);
    if (head.size() != 4 || head[0] != "code")
        fail(ls.num[0], "expected header 'code <p> <n> <d>'");
    auto [p, n] = parse_header_pn(head, ls.num[0]);
    const i64 d = parse_int(head[3], ls.num[0]);
    if (d < 1 || d > n + 1) fail(ls.num[0], "distance out of range");

    ParsedCode pc;
    pc.graph = WeightedGraph::empty(p, n);
    pc.d = static_cast<int>(d);
    std::set<std::pair<int, int>> seen;

    std::size_t i = 1;
    for (; i < ls.raw.size(); ++i) {
        auto toks = split_ws(ls.raw[i]);
        if (toks.size() == 1 && toks[0] == "clique") break;
        if (toks.size() != 4 || toks[0] != "edge")
            fail(ls.num[i], "expected 'edge <a> <b> <w>' or 'clique'");
        add_edge(pc.graph, seen, parse_int(toks[1], ls.num[i]), parse_int(toks[2], ls.num[i]),
                 parse_int(toks[3], ls.num[i]), ls.num[i]);
    }
    if (i == ls.raw.size()) throw InputError("line " + std::to_string(ls.num.back()) +
                                             ": missing 'clique' section");
    for (++i; i < ls.raw.size(); ++i) {
        std::string entry;
        std::istringstream is(ls.raw[i]);
        ZpVec v(p, static_cast<std::size_t>(n));
        std::size_t pos = 0;
        while (std::getline(is, entry, ',')) {
            // trim
            const std::size_t a = entry.find_first_not_of(" \t");
            const std::size_t b = entry.find_last_not_of(" \t");
            if (a == std::string::npos) fail(ls.num[i], "empty vector entry");
            if (pos >= static_cast<std::size_t>(n)) fail(ls.num[i], "vector has too many entries");
            const i64 val = parse_int(entry.substr(a, b - a + 1), ls.num[i]);
            if (val >= p || val <= -p) fail(ls.num[i], "entry out of range");
            v.set(pos++, val);
        }
        if (pos != static_cast<std::size_t>(n)) fail(ls.num[i], "vector has too few entries");
        for (const auto& prev : pc.clique)
            if (prev == v) fail(ls.num[i], "duplicate clique vector");
        pc.clique.push_back(std::move(v));
    }
    if (pc.clique.empty()) throw InputError("line " + std::to_string(ls.num.back()) +
                                            ": clique section is empty");
    const ZpVec zero(p, static_cast<std::size_t>(n));
    bool has_zero = false;
    for (const auto& v : pc.clique) has_zero = has_zero || v == zero;
    if (!has_zero) throw InputError("line " + std::to_string(ls.num.back()) +
                                    ": the zero vector is mandatory in the clique section");
    return pc;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string edges_block(const WeightedGraph& g, const char* prefix) {
    std::string out;
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b) {
            const i64 w = g.at(a - 1, b - 1);
            if (w == 0) continue;
            out += prefix;
            out += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(w) + "\n";
        }
    return out;
}

} // namespace

WeightedGraph parse_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }
ParsedCode parse_code_file(const std::string& path) { return parse_code_text(read_file(path)); }

std::string serialize_graph(const WeightedGraph& g) {
    return "graph " + std::to_string(g.p) + " " + std::to_string(g.n) + "\n" +
           edges_block(g, "");
}

std::string serialize_code(const GraphCode& code) {
    std::string out = "code " + std::to_string(code.p()) + " " + std::to_string(code.n()) + " " +
                      std::to_string(code.d) + "\n";
    out += edges_block(code.graph, "edge ");
    out += "clique\n";
    for (const auto& v : code.clique) {
        for (std::size_t a = 0; a < v.size(); ++a) {
            if (a) out += ",";
            out += std::to_string(v[a]);
        }
        out += "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

} // namespace graphcode
