#include "cfcon/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "cfcon/errors.hpp"

namespace cfcon {

bool parse_int_fields(const std::string& line, std::vector<long long>& fields) {
    fields.clear();
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p == end) break;
        long long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
            return false;
        }
        fields.push_back(value);
        p = next;
    }
    return true;
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<long long> fields;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) fail(1, "missing header \"n m\"");
    ++line_no;
    if (!parse_int_fields(line, fields) || fields.size() != 2) fail(line_no, "expected header \"n m\"");
    const long long n = fields[0];
    const long long m = fields[1];
    if (n < 0 || n > std::numeric_limits<Vertex>::max()) fail(line_no, "vertex count out of range");
    if (m < 0 || m > n * (n - 1) / 2) fail(line_no, "edge count out of range for n");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<int, int>> seen;
    while (static_cast<long long>(pairs.size()) < m) {
        if (!std::getline(in, line)) {
            fail(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(pairs.size()));
        }
        ++line_no;
        if (!parse_int_fields(line, fields) || fields.size() != 2) fail(line_no, "expected \"u v\"");
        const long long u = fields[0];
        const long long v = fields[1];
        if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "vertex outside [0, n)");
        if (u == v) fail(line_no, "self-loop");
        const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(key).second) fail(line_no, "duplicate edge");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) fail(line_no, "unexpected content after edge list");
    }
    return Graph(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    std::ostringstream buf;
    buf << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) buf << e.u << ' ' << e.v << '\n';
    out << buf.str();
}

}  // namespace cfcon
